#ifndef QES_QUARTIC_HPP
#define QES_QUARTIC_HPP

#include <tuple>
#include <vector>

#include "qes/types.hpp"

// QES pipeline for the symmetrized quartic oscillator
//   V(x) = x^4 - s|x|^3 + r x^2 - q|x|
// with gauge factor W(x) = -|x|^3/3 + a x^2 - b|x|.

namespace qes {

struct QuarticModel {
  double a = 0.0;
  double b = 0.0;
  int n = 0;
  double s() const { return 4.0 * a; }
  double r() const { return 4.0 * a * a + 2.0 * b; }
  double q() const { return 4.0 * a * b + 2.0 * n + 2.0; }
};

// (s, r, q) = (4a, 4a^2 + 2b, 4ab + 2n + 2).
std::tuple<double, double, double> quartic_potential_coeffs(double a, double b, int n);

struct QuarticSectorResult {
  std::vector<QesState> states;  // ascending energy, monic coefficients, parity unset
  int complex_pairs = 0;
};

// Eigenpairs of the gauge operator at (a, b, n), converted to monic coefficient
// vectors. No parity filtering; provenance = matrix.
QuarticSectorResult solve_quartic_sector(double a, double b, int n);

// Continuity constraint at x=0: v1 + b v0 = 0 (even) or v0 = 0 (odd), tested
// relative to max(1, |v0|, |v1|). Records the parity on the state when true.
bool matching_filter(QesState& state, Parity parity, double tol = 1e-9);

struct FixedParam {
  char name;  // 'a' or 'b'
  double value;
};

class NoClosedFormError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct QuarticFamilyResult {
  std::vector<QesState> states;
  bool degenerate = false;  // a^2 == b double eigenvalue collapsed to one state
};

// Closed families: (0,even) E=-2a, phi=1, b=0; (1,odd) E=-6a, phi=x, b=0;
// (1,even) fixed b != 0, a=-(b^3+1)/(2b), E=(2b^3+1)/b, phi=x-1/b.
QuarticFamilyResult quartic_family_solve(int n, Parity parity, FixedParam fixed);

struct ConstraintSearchConfig {
  double b_min = -3.0;
  double b_max = 3.0;
  double step = 1e-2;
  double refine_tol = 1e-10;
};

// Generic admissibility search at fixed a: marches b, tracks eigen-branches by
// nearest-eigenvalue continuation, and bisects sign changes of the constraint
// residual to refine_tol. Returns the admissible states found (provenance = matrix).
std::vector<QesState> quartic_constraint_search(int n, Parity parity, double a,
                                                ConstraintSearchConfig cfg = {});

}  // namespace qes

#endif
