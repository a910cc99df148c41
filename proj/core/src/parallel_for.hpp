#pragma once

#include <cstddef>
#include <cstdint>

#ifdef SAMPENG_HAVE_OPENMP
#include <omp.h>
#endif

namespace sampeng::detail {

/// Runs body(i) for i in [0, n). Iterations must write disjoint outputs.
/// threads == 0 uses the current default; nested calls run serially.
template <class Body>
void parallel_for(std::size_t n, Body&& body, std::size_t threads = 0) {
#ifdef SAMPENG_HAVE_OPENMP
    const int team = threads == 0 ? omp_get_max_threads() : static_cast<int>(threads);
    if (team > 1 && n > 1 && !omp_in_parallel()) {
        const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 16) num_threads(team)
        for (std::int64_t i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
        return;
    }
#else
    (void)threads;
#endif
    for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace sampeng::detail
