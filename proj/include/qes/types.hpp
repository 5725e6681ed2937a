#ifndef QES_TYPES_HPP
#define QES_TYPES_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qes {

enum class Family { quartic, sextic };

// Wavefunction parity under x -> -x; epsilon = +1 (even) or -1 (odd).
enum class Parity : int { even = +1, odd = -1 };

inline int epsilon(Parity p) { return static_cast<int>(p); }
inline Parity parity_from_epsilon(int eps) {
  if (eps != 1 && eps != -1) throw std::invalid_argument("parity epsilon must be +1 or -1");
  return static_cast<Parity>(eps);
}

// natural: epsilon == (-1)^n; unnatural: epsilon == (-1)^(n+1).
enum class ParityCategory { natural, unnatural };

enum class Provenance { closed_form, matrix, bethe };

struct GaugeParams {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;  // sextic only
};

// One admissible eigenpair. `coeffs` are the polynomial coefficients
// v0..vn of the x<0 branch in ascending degree, monic (highest nonzero
// coefficient +1). The x>0 branch is epsilon * sum (-1)^k v_k x^k.
struct QesState {
  Family family = Family::quartic;
  double energy = 0.0;
  Parity parity = Parity::even;
  std::vector<double> coeffs;
  GaugeParams gauge;
  std::optional<int> node_count;
  Provenance provenance = Provenance::closed_form;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

inline const char* family_name(Family f) { return f == Family::quartic ? "quartic" : "sextic"; }
inline const char* parity_name(Parity p) { return p == Parity::even ? "even" : "odd"; }
inline const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::closed_form: return "closed-form";
    case Provenance::matrix: return "matrix";
    default: return "bethe";
  }
}

}  // namespace qes

#endif
