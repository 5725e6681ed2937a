#ifndef QES_PARALLEL_HPP
#define QES_PARALLEL_HPP

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qes {

// Execution policy for the data-parallel kernels (multistart Newton batches,
// per-index tridiagonal bisection, grid evaluation). The serial path is the
// reference implementation; both paths write into disjoint slots and merge in
// index order, so results are bitwise identical for any thread count.
enum class Exec { serial, openmp };

inline bool openmp_compiled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

template <class Body>
void for_each_index(Exec exec, int n, Body&& body) {
#ifdef _OPENMP
  if (exec == Exec::openmp) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
#else
  (void)exec;
#endif
  for (int i = 0; i < n; ++i) body(i);
}

}  // namespace qes

#endif
