#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace chibound {

/// Runs f(i) for i in [0, count) across the OpenMP thread pool (dynamic
/// schedule), or serially when built without OpenMP. Results must be written
/// to preallocated per-index slots so the outcome is order-independent.
template <class F>
void parallel_for_index(std::size_t count, F f) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < (long long)count; ++i) f((std::size_t)i);
#else
    for (std::size_t i = 0; i < count; ++i) f(i);
#endif
}

inline int parallel_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace chibound
