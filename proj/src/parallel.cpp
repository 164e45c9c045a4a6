#include "staircase/parallel.hpp"

#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace staircase {

int thread_count() {
    if (const char* env = std::getenv("STAIRCASE_THREADS")) {
        try {
            int n = std::stoi(env);
            if (n > 0) return n;
        } catch (const std::exception&) {
        }
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void parallel_for(long n, const std::function<void(long)>& body, Execution mode) {
    if (mode == Execution::Serial || n < 2 || thread_count() == 1) {
        for (long i = 0; i < n; ++i) body(i);
        return;
    }
    std::exception_ptr error;
    std::mutex mu;
#ifdef _OPENMP
    // Nested loops run serially inside an outer parallel region.
    if (omp_in_parallel()) {
        for (long i = 0; i < n; ++i) body(i);
        return;
    }
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count())
#endif
    for (long i = 0; i < n; ++i) {
        try {
            body(i);
        } catch (...) {
            std::lock_guard lock(mu);
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
}

}  // namespace staircase
