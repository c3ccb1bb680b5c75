#include "bordism/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <exception>
#include <mutex>

namespace bordism {

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void set_threads(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

void parallel_for(long n, bool parallel, const std::function<void(long)>& fn) {
    if (!parallel) {
        for (long i = 0; i < n; ++i) fn(i);
        return;
    }
#ifdef _OPENMP
    std::exception_ptr err;
    std::mutex err_mu;
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
        try {
            fn(i);
        } catch (...) {
            std::lock_guard<std::mutex> lock(err_mu);
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
#else
    for (long i = 0; i < n; ++i) fn(i);
#endif
}

} // namespace bordism
