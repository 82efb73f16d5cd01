#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lensgem::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInputError = 2 };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics and usage text to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lensgem::cli
