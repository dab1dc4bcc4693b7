#pragma once

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace anxdet {

// Execution policy for the data-parallel kernels (window feature extraction,
// tree fitting, grid search, correlation scans, cohort synthesis). Every
// kernel is written so that serial and parallel runs produce bit-identical
// results: loop bodies are pure per item and any randomness uses a seed
// derived from the item index, never a shared stream.
enum class Exec { Serial, Parallel };

inline Exec default_exec() {
#ifdef _OPENMP
    return Exec::Parallel;
#else
    return Exec::Serial;
#endif
}

template <typename Body>
void exec_for(Exec policy, std::int64_t n, Body&& body) {
#ifdef _OPENMP
    if (policy == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t i = 0; i < n; ++i) body(i);
        return;
    }
#else
    (void)policy;
#endif
    for (std::int64_t i = 0; i < n; ++i) body(i);
}

inline int exec_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace anxdet
