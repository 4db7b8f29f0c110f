#ifndef ATTDEL_PARALLEL_HPP
#define ATTDEL_PARALLEL_HPP

#include <exception>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace attdel {

// Global switch for the OpenMP kernels. Results are identical either way;
// the serial paths are kept as references and for benchmarking.
bool parallel_enabled();
void set_parallel(bool on);
int worker_count();

// Runs fn(0..n-1). Iterations must be independent; outputs should be
// written to per-index slots so the result is order-independent. The
// first exception thrown by any iteration is rethrown.
template <typename F>
void parallel_for(long n, bool parallel, F&& fn) {
#ifdef _OPENMP
  if (parallel && parallel_enabled() && n > 1) {
    std::exception_ptr error = nullptr;
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) {
      try {
        fn(i);
      } catch (...) {
#pragma omp critical
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
    return;
  }
#else
  (void)parallel;
#endif
  for (long i = 0; i < n; ++i) fn(i);
}

}  // namespace attdel

#endif
