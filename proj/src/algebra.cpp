#include "qes/algebra.hpp"

#include <algorithm>
#include <cmath>

namespace qes {

DenseOperator generator_matrix(GeneratorKind kind, RepDimension dim) {
  const int n = dim.n;
  const int d = dim.dim();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  switch (kind) {
    case GeneratorKind::raising:
      for (int k = 0; k + 1 < d; ++k) m(k + 1, k) = static_cast<double>(k - n);
      break;
    case GeneratorKind::neutral:
      for (int k = 0; k < d; ++k) m(k, k) = k - 0.5 * n;
      break;
    case GeneratorKind::lowering:
      for (int k = 1; k < d; ++k) m(k - 1, k) = static_cast<double>(k);
      break;
  }
  return DenseOperator{std::move(m)};
}

DenseOperator quartic_gauge_operator(double a, double b, RepDimension dim) {
  const int d = dim.dim();
  const Eigen::MatrixXd jp = generator_matrix(GeneratorKind::raising, dim).entries;
  const Eigen::MatrixXd j0 = generator_matrix(GeneratorKind::neutral, dim).entries;
  const Eigen::MatrixXd jm = generator_matrix(GeneratorKind::lowering, dim).entries;
  Eigen::MatrixXd h = -jm * jm - 2.0 * jp - 4.0 * a * j0 - 2.0 * b * jm;
  h.diagonal().array() -= 2.0 * (dim.n + 1) * a + b * b;
  (void)d;
  return DenseOperator{std::move(h)};
}

DiagonalizeResult diagonalize(const DenseOperator& op, double imag_tol) {
  const int d = op.dim();
  if (d <= 0 || op.entries.cols() != d)
    throw std::invalid_argument("diagonalize: matrix must be square and non-empty");
  if (d > 32) throw std::invalid_argument("diagonalize: dimension capped at 32");

  Eigen::EigenSolver<Eigen::MatrixXd> solver(op.entries, /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success)
    throw EigensolverError("dense eigensolver failed to converge", op.entries);

  DiagonalizeResult out;
  for (int i = 0; i < d; ++i) {
    const auto lambda = solver.eigenvalues()(i);
    if (std::abs(lambda.imag()) > imag_tol) {
      ++out.complex_pairs;
      continue;
    }
    EigenPair pair;
    pair.eigenvalue = lambda.real();
    pair.eigenvector.resize(d);
    int arg_max = 0;
    double mx = 0.0;
    for (int k = 0; k < d; ++k) {
      pair.eigenvector[k] = solver.eigenvectors()(k, i).real();
      if (std::abs(pair.eigenvector[k]) > mx) {
        mx = std::abs(pair.eigenvector[k]);
        arg_max = k;
      }
    }
    if (mx > 0.0) {
      const double scale = pair.eigenvector[arg_max];
      for (auto& v : pair.eigenvector) v /= scale;
    }
    out.pairs.push_back(std::move(pair));
  }
  std::sort(out.pairs.begin(), out.pairs.end(),
            [](const EigenPair& l, const EigenPair& r) { return l.eigenvalue < r.eigenvalue; });
  return out;
}

}  // namespace qes
