#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lensgem {

/// Worker count for a kernel: `jobs <= 0` means "all available threads".
inline int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace lensgem
