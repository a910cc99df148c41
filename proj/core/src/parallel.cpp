#include "sampeng/parallel.hpp"

#include <algorithm>
#include <thread>

#ifdef SAMPENG_HAVE_OPENMP
#include <omp.h>
#endif

namespace sampeng {

void set_default_threads(std::size_t threads) {
#ifdef SAMPENG_HAVE_OPENMP
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    omp_set_num_threads(static_cast<int>(threads));
#else
    (void)threads;
#endif
}

std::size_t default_threads() {
#ifdef SAMPENG_HAVE_OPENMP
    return static_cast<std::size_t>(omp_get_max_threads());
#else
    return 1;
#endif
}

}  // namespace sampeng
