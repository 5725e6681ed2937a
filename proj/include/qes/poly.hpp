#ifndef QES_POLY_HPP
#define QES_POLY_HPP

#include <cmath>
#include <cstddef>
#include <vector>

// Small helpers on polynomial coefficient vectors, ascending degree.

namespace qes::poly {

inline double eval(const std::vector<double>& c, double x) {
  double acc = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
  return acc;
}

inline std::vector<double> derivative(const std::vector<double>& c) {
  if (c.size() <= 1) return {0.0};
  std::vector<double> d(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = static_cast<double>(k) * c[k];
  return d;
}

// Expand prod_i (x - roots[i]).
inline std::vector<double> from_roots(const std::vector<double>& roots) {
  std::vector<double> c{1.0};
  for (double r : roots) {
    std::vector<double> next(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = std::move(next);
  }
  return c;
}

// Rescale so the highest coefficient of magnitude > drop_tol * max|c| is +1;
// entries below that threshold at the top are truncated to zero.
inline std::vector<double> monic(std::vector<double> c, double drop_tol = 1e-12) {
  double top = 0.0;
  for (double v : c) top = std::max(top, std::abs(v));
  if (top == 0.0) return c;
  std::size_t lead = c.size();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (std::abs(c[k]) > drop_tol * top) {
      lead = k;
      break;
    }
  }
  if (lead == c.size()) return c;
  for (std::size_t k = lead + 1; k < c.size(); ++k) c[k] = 0.0;
  const double scale = c[lead];
  for (auto& v : c) v /= scale;
  c[lead] = 1.0;
  return c;
}

}  // namespace qes::poly

#endif
