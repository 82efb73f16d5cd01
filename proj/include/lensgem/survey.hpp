#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lensgem/lens.hpp"

namespace lensgem {

/// One normalized lens space run through construction, homology, symmetry and
/// the GM search.
struct LensSurveyRow {
    int p = 0;
    int q = 0;
    int s = 0;          ///< S(p,q)
    int order = 0;
    int k_upper = 0;    ///< order/2 - 1 = 2S - 1
    int gm_value = 0;
    int bound = 0;      ///< S - 3 (meaningful for p >= 3)
    bool bound_applies = false;
    bool bound_ok = false;
    bool h1_ok = false;
    bool symmetry_ok = false;
    bool sharp_forced = false;
    /// order = 4S, bipartite, contracted, closed-manifold check.
    bool structure_ok = false;
};

/// All normalized (p,q) with 2 <= p <= p_max, q ascending within p.
std::vector<LensParams> lens_range(int p_max);

/// True iff c(L(p,q)) = S - 3 is known, so that the GM search must hit the
/// bound exactly: S <= 8, or L(p,q) lies in one of the families L(2r,1),
/// L(4r,2r-1), L((r+2)(t+1)+1,t+1) (t>r>1, r odd, t even),
/// L((r+1)(t+2)+1,t+2) (t>r>1, r even, t odd). Both q and its inverse mod p
/// are tried.
bool sharp_bound_known(const LensParams& lp);

LensSurveyRow survey_row(const LensParams& lp);

/// Parallel over parameters; rows in lens_range order regardless of `jobs`.
std::vector<LensSurveyRow> survey_lens_range(int p_max, int jobs = 0);
std::vector<LensSurveyRow> survey_lens_range_serial(int p_max);

/// First failing row as a human-readable diagnostic.
std::optional<std::string> survey_failure(const std::vector<LensSurveyRow>& rows);

/// Header `p,q,S,order,k_upper,gm,bound,bound_ok,h1_ok,symmetry_ok,sharp_forced`.
void write_survey_csv(std::ostream& out, const std::vector<LensSurveyRow>& rows);

}  // namespace lensgem
