#ifndef QES_SEXTIC_HPP
#define QES_SEXTIC_HPP

#include <cstdint>
#include <vector>

#include "qes/parallel.hpp"
#include "qes/types.hpp"

// QES pipeline for the symmetrized sextic oscillator
//   V(x) = x^6 - u|x|^5 + t x^4 - s|x|^3 + r x^2 - q|x|
// with gauge factor W(x) = -x^4/4 - a|x|^3 + b x^2 - c|x|, solved by the
// functional Bethe ansatz: phi_n(x) = prod_i (x - x_i) with the roots
// satisfying sum_{j!=i} 1/(x_i-x_j) - x_i^3 + 3a x_i^2 + 2b x_i + c = 0.

namespace qes {

struct SexticModel {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  int n = 0;
  double u() const { return -6.0 * a; }
  double t() const { return 9.0 * a * a - 4.0 * b; }
  double s() const { return 12.0 * a * b - 2.0 * c; }
  double r() const { return 4.0 * b * b + 6.0 * a * c - 2.0 * n - 3.0; }
  double q(double sum_roots) const { return -2.0 * sum_roots + 6.0 * a * (n + 1) + 4.0 * b * c; }
};

// Roots x_1..x_n of the x<0 branch polynomial, ascending. Pairwise distinct
// within 1e-8 * (1 + max|x_i|), enforced at construction.
struct BetheRoots {
  std::vector<double> roots;
  static BetheRoots checked(std::vector<double> roots);
  double sum() const;
  double sum_sq() const;
};

struct SexticCoeffs {
  double u, t, s, r, q;
};

SexticCoeffs sextic_potential_coeffs(const SexticModel& model, const BetheRoots& roots);

// Component i: sum_{j!=i} 1/(x_i - x_j) - x_i^3 + 3a x_i^2 + 2b x_i + c.
std::vector<double> bethe_residuals(const BetheRoots& roots, double a, double b, double c);

struct MultistartConfig {
  int starts = 200;
  std::uint64_t seed = 0;
  int max_iterations = 80;
  double residual_tol = 1e-12;  // Newton exit; emitted sets satisfy < 1e-10 with margin
  double dedup_tol = 1e-6;
};

struct BetheSolveResult {
  std::vector<BetheRoots> sets;  // deduplicated, each sorted ascending
  int failed_starts = 0;
  int rejected_near_degenerate = 0;
};

// Damped-Newton multistart on the Bethe residuals. Deterministic for a fixed
// seed regardless of execution policy or thread count.
BetheSolveResult solve_bethe(int n, double a, double b, double c, MultistartConfig cfg = {},
                             Exec exec = Exec::openmp);

// E = 2 sum x_i^2 - 6a sum x_i - 2b(2n+1) - c^2.
double sextic_energy(const BetheRoots& roots, double a, double b, double c, int n);

// Expands prod (x - x_i) and tests v1 + c v0 = 0 (even) or v0 = 0 (odd).
bool sextic_matching_filter(const BetheRoots& roots, double c, Parity parity, double tol = 1e-9);

struct SexticFamilyResult {
  std::vector<QesState> states;  // ascending energy
  int failed_starts = 0;
  int rejected = 0;  // excluded or non-validating candidate solutions
};

// Worked families. (0,even) and (1,odd) force c=0; (1,even) and (2,odd) solve
// a quartic in c; (2,even) solves the coupled two-root system by multistart
// Newton in the symmetric coordinates (x1+x2, x1*x2, c), which also captures
// complex-conjugate root pairs with real polynomial part.
SexticFamilyResult sextic_family_solve(int n, Parity parity, double a, double b,
                                       MultistartConfig cfg = {}, Exec exec = Exec::openmp);

ParityCategory classify_parity_category(int n, Parity parity);

// Real roots of k4*c^4 + k2*c^2 + k1*c + k0 = 0 via companion-matrix
// eigenvalues polished by Newton; |imag| < 1e-10 kept.
std::vector<double> real_quartic_roots(double k4, double k2, double k1, double k0);

}  // namespace qes

#endif
