#pragma once

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace plhyp {

// Thread budget for the OpenMP kernels. PLHYP_THREADS caps it; unset or
// invalid means "whatever OpenMP gives us".
inline int thread_count() {
#ifdef _OPENMP
    int max_threads = omp_get_max_threads();
#else
    int max_threads = 1;
#endif
    if (const char* env = std::getenv("PLHYP_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0 && v < 1024) {
            return static_cast<int>(v < max_threads ? v : max_threads);
        }
    }
    return max_threads;
}

}  // namespace plhyp
