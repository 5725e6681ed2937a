#ifndef QES_ALGEBRA_HPP
#define QES_ALGEBRA_HPP

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

// Finite-dimensional sl(2,R) representation on polynomials of degree <= n
// and the gauge-rotated quartic operator h acting on that space.

namespace qes {

// Polynomial degree cutoff; the representation space <1, x, ..., x^n> has
// dimension n+1.
struct RepDimension {
  int n;
  explicit RepDimension(int n_) : n(n_) {
    if (n < 0) throw std::invalid_argument("representation degree must be >= 0");
  }
  int dim() const { return n + 1; }
};

// Matrix acting on coefficient vectors (v0, ..., vn) of phi(x) = sum v_k x^k,
// basis ordered by ascending monomial degree.
struct DenseOperator {
  Eigen::MatrixXd entries;
  int dim() const { return static_cast<int>(entries.rows()); }
};

enum class GeneratorKind { raising, neutral, lowering };

// J+ : x^k -> (k-n) x^(k+1);  J0 : x^k -> (k-n/2) x^k;  J- : x^k -> k x^(k-1).
DenseOperator generator_matrix(GeneratorKind kind, RepDimension dim);

// h = -J- J- - 2 J+ - 4a J0 - 2b J- - (2(n+1)a + b^2) I.
DenseOperator quartic_gauge_operator(double a, double b, RepDimension dim);

struct EigenPair {
  double eigenvalue = 0.0;
  std::vector<double> eigenvector;  // scaled so the largest-|.| component is +1
};

struct DiagonalizeResult {
  std::vector<EigenPair> pairs;  // ascending by eigenvalue
  int complex_pairs = 0;         // eigenvalues discarded for |Im| > imag_tol
};

class EigensolverError : public std::runtime_error {
 public:
  EigensolverError(std::string what, Eigen::MatrixXd m)
      : std::runtime_error(std::move(what)), matrix(std::move(m)) {}
  Eigen::MatrixXd matrix;
};

// All real eigenpairs of a general (non-symmetric) real matrix, ascending.
// Eigenvalues with |Im| > imag_tol are excluded and counted.
DiagonalizeResult diagonalize(const DenseOperator& op, double imag_tol = 1e-9);

}  // namespace qes

#endif
