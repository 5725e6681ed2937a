#include "qes/sextic.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <random>

#include "qes/poly.hpp"

namespace qes {

namespace {

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

bool pairwise_distinct(const std::vector<double>& xs, double rel = 1e-8) {
  const double scale = 1.0 + max_abs(xs);
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (std::abs(xs[i] - xs[j]) <= rel * scale) return false;
  return true;
}

}  // namespace

BetheRoots BetheRoots::checked(std::vector<double> roots) {
  std::sort(roots.begin(), roots.end());
  if (!pairwise_distinct(roots))
    throw std::invalid_argument("BetheRoots: roots must be pairwise distinct");
  return BetheRoots{std::move(roots)};
}

double BetheRoots::sum() const {
  double s = 0.0;
  for (double x : roots) s += x;
  return s;
}

double BetheRoots::sum_sq() const {
  double s = 0.0;
  for (double x : roots) s += x * x;
  return s;
}

SexticCoeffs sextic_potential_coeffs(const SexticModel& model, const BetheRoots& roots) {
  if (static_cast<int>(roots.roots.size()) != model.n)
    throw std::invalid_argument("sextic_potential_coeffs: root count must equal n");
  return SexticCoeffs{model.u(), model.t(), model.s(), model.r(), model.q(roots.sum())};
}

std::vector<double> bethe_residuals(const BetheRoots& roots, double a, double b, double c) {
  const auto& xs = roots.roots;
  if (!pairwise_distinct(xs, 1e-14))
    throw std::invalid_argument("bethe_residuals: coincident roots make the interaction singular");
  std::vector<double> res(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < xs.size(); ++j)
      if (j != i) acc += 1.0 / (xs[i] - xs[j]);
    const double x = xs[i];
    res[i] = acc - x * x * x + 3.0 * a * x * x + 2.0 * b * x + c;
  }
  return res;
}

double sextic_energy(const BetheRoots& roots, double a, double b, double c, int n) {
  if (static_cast<int>(roots.roots.size()) != n)
    throw std::invalid_argument("sextic_energy: root count must equal n");
  return 2.0 * roots.sum_sq() - 6.0 * a * roots.sum() - 2.0 * b * (2 * n + 1) - c * c;
}

bool sextic_matching_filter(const BetheRoots& roots, double c, Parity parity, double tol) {
  const auto coeffs = poly::from_roots(roots.roots);
  const double v0 = coeffs[0];
  const double v1 = coeffs.size() > 1 ? coeffs[1] : 0.0;
  const double scale = std::max({1.0, std::abs(v0), std::abs(v1)});
  const double residual = parity == Parity::even ? v1 + c * v0 : v0;
  return std::abs(residual) <= tol * scale;
}

ParityCategory classify_parity_category(int n, Parity parity) {
  const int natural_eps = (n % 2 == 0) ? +1 : -1;
  return epsilon(parity) == natural_eps ? ParityCategory::natural : ParityCategory::unnatural;
}

std::vector<double> real_quartic_roots(double k4, double k2, double k1, double k0) {
  if (k4 == 0.0) throw std::invalid_argument("real_quartic_roots: leading coefficient is zero");
  const double p2 = k2 / k4, p1 = k1 / k4, p0 = k0 / k4;
  Eigen::Matrix4d companion = Eigen::Matrix4d::Zero();
  companion(1, 0) = 1.0;
  companion(2, 1) = 1.0;
  companion(3, 2) = 1.0;
  companion(0, 3) = -p0;
  companion(1, 3) = -p1;
  companion(2, 3) = -p2;
  companion(3, 3) = 0.0;  // no cubic term in the families handled here
  Eigen::EigenSolver<Eigen::Matrix4d> solver(companion, false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("real_quartic_roots: companion eigensolver failed");

  const auto p = [&](double x) { return ((x * x + p2) * x + p1) * x + p0; };
  const auto dp = [&](double x) { return (4.0 * x * x + 2.0 * p2) * x + p1; };

  std::vector<double> roots;
  for (int i = 0; i < 4; ++i) {
    const auto lambda = solver.eigenvalues()(i);
    if (std::abs(lambda.imag()) >= 1e-10) continue;
    double x = lambda.real();
    for (int it = 0; it < 4; ++it) {
      const double d = dp(x);
      if (d == 0.0) break;
      x -= p(x) / d;
    }
    roots.push_back(x);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [](double l, double r) { return std::abs(l - r) < 1e-12; }),
              roots.end());
  return roots;
}

namespace {

// One damped-Newton run on the n-root Bethe system from a given start.
std::optional<std::vector<double>> newton_bethe(std::vector<double> x, double a, double b,
                                                double c, const MultistartConfig& cfg) {
  const int n = static_cast<int>(x.size());
  Eigen::MatrixXd jac(n, n);
  Eigen::VectorXd f(n), step(n);

  const auto residual = [&](const std::vector<double>& xs, Eigen::VectorXd& out) -> bool {
    for (int i = 0; i < n; ++i) {
      double acc = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        const double gap = xs[i] - xs[j];
        if (std::abs(gap) < 1e-12) return false;
        acc += 1.0 / gap;
      }
      const double xi = xs[i];
      out(i) = acc - xi * xi * xi + 3.0 * a * xi * xi + 2.0 * b * xi + c;
    }
    return true;
  };

  if (!residual(x, f)) return std::nullopt;
  double fnorm = f.lpNorm<Eigen::Infinity>();
  for (int iter = 0; iter < cfg.max_iterations; ++iter) {
    if (fnorm < cfg.residual_tol) return x;
    for (int i = 0; i < n; ++i) {
      double diag = -3.0 * x[i] * x[i] + 6.0 * a * x[i] + 2.0 * b;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        const double inv = 1.0 / (x[i] - x[j]);
        jac(i, j) = inv * inv;
        diag -= inv * inv;
      }
      jac(i, i) = diag;
    }
    step = jac.partialPivLu().solve(f);
    if (!step.allFinite()) return std::nullopt;

    double lambda = 1.0;
    bool accepted = false;
    std::vector<double> trial(n);
    Eigen::VectorXd ftrial(n);
    for (int halvings = 0; halvings < 25; ++halvings) {
      for (int i = 0; i < n; ++i) trial[i] = x[i] - lambda * step(i);
      if (residual(trial, ftrial)) {
        const double tnorm = ftrial.lpNorm<Eigen::Infinity>();
        if (tnorm < fnorm) {
          x = trial;
          f = ftrial;
          fnorm = tnorm;
          accepted = true;
          break;
        }
      }
      lambda *= 0.5;
    }
    if (!accepted) return std::nullopt;
  }
  return fnorm < cfg.residual_tol ? std::optional(x) : std::nullopt;
}

bool same_root_set(const std::vector<double>& l, const std::vector<double>& r, double tol) {
  if (l.size() != r.size()) return false;
  for (std::size_t i = 0; i < l.size(); ++i)
    if (std::abs(l[i] - r[i]) > tol) return false;
  return true;
}

}  // namespace

BetheSolveResult solve_bethe(int n, double a, double b, double c, MultistartConfig cfg,
                             Exec exec) {
  if (n < 0 || n > 8) throw std::invalid_argument("solve_bethe: need 0 <= n <= 8");
  BetheSolveResult out;
  if (n == 0) {
    out.sets.push_back(BetheRoots{});
    return out;
  }

  // Starts are drawn up front in a fixed order so the result is independent
  // of scheduling. Bethe roots are bounded by the turning points of the gauge
  // cubic, hence the box radius.
  const double radius = 2.0 + std::abs(a) + std::sqrt(1.0 + std::abs(b)) + std::abs(c);
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> box(-radius, radius);
  std::vector<std::vector<double>> starts(cfg.starts, std::vector<double>(n));
  for (auto& s : starts)
    for (auto& xi : s) xi = box(rng);

  std::vector<std::optional<std::vector<double>>> slot(cfg.starts);
  for_each_index(exec, cfg.starts, [&](int i) {
    auto res = newton_bethe(starts[i], a, b, c, cfg);
    if (res) std::sort(res->begin(), res->end());
    slot[i] = std::move(res);
  });

  for (const auto& res : slot) {
    if (!res) {
      ++out.failed_starts;
      continue;
    }
    if (!pairwise_distinct(*res)) {
      ++out.rejected_near_degenerate;
      continue;
    }
    BetheRoots candidate{*res};
    double worst = 0.0;
    for (double r : bethe_residuals(candidate, a, b, c)) worst = std::max(worst, std::abs(r));
    if (worst >= 1e-10) {
      ++out.failed_starts;
      continue;
    }
    const bool dup = std::any_of(out.sets.begin(), out.sets.end(), [&](const BetheRoots& s) {
      return same_root_set(s.roots, candidate.roots, cfg.dedup_tol);
    });
    if (!dup) out.sets.push_back(std::move(candidate));
  }
  return out;
}

namespace {

struct SymmetricSolution {
  double e1, e2, c;  // x1+x2, x1*x2, c
};

// The n=2 even system in symmetric coordinates: summing/subtracting the two
// Bethe equations for f(x) = x^3 - 3a x^2 - 2b x - c gives
//   F1 = e1^3 - 3 e1 e2 - 3a (e1^2 - 2 e2) - 2b e1 - 2c          = f(x1)+f(x2)
//   F2 = (e1^2 - 4 e2) (e1^2 - e2 - 3a e1 - 2b) - 2              = (x1-x2)^2 [..] - 2
//   F3 = e1 - c e2                                                (matching constraint)
// Real solutions with e1^2 < 4 e2 are complex-conjugate root pairs; the
// polynomial x^2 - e1 x + e2 stays real.
void symmetric_system(double a, double b, const SymmetricSolution& s, Eigen::Vector3d& f) {
  const double disc = s.e1 * s.e1 - 4.0 * s.e2;
  f(0) = s.e1 * s.e1 * s.e1 - 3.0 * s.e1 * s.e2 - 3.0 * a * (s.e1 * s.e1 - 2.0 * s.e2) -
         2.0 * b * s.e1 - 2.0 * s.c;
  f(1) = disc * (s.e1 * s.e1 - s.e2 - 3.0 * a * s.e1 - 2.0 * b) - 2.0;
  f(2) = s.e1 - s.c * s.e2;
}

void symmetric_jacobian(double a, double b, const SymmetricSolution& s, Eigen::Matrix3d& j) {
  const double g = s.e1 * s.e1 - s.e2 - 3.0 * a * s.e1 - 2.0 * b;
  const double disc = s.e1 * s.e1 - 4.0 * s.e2;
  j(0, 0) = 3.0 * s.e1 * s.e1 - 3.0 * s.e2 - 6.0 * a * s.e1 - 2.0 * b;
  j(0, 1) = -3.0 * s.e1 + 6.0 * a;
  j(0, 2) = -2.0;
  j(1, 0) = 2.0 * s.e1 * g + disc * (2.0 * s.e1 - 3.0 * a);
  j(1, 1) = -4.0 * g - disc;
  j(1, 2) = 0.0;
  j(2, 0) = 1.0;
  j(2, 1) = -s.c;
  j(2, 2) = -s.e2;
}

std::optional<SymmetricSolution> newton_symmetric(SymmetricSolution s, double a, double b,
                                                  const MultistartConfig& cfg) {
  Eigen::Vector3d f, ftrial;
  Eigen::Matrix3d jac;
  symmetric_system(a, b, s, f);
  double fnorm = f.lpNorm<Eigen::Infinity>();
  for (int iter = 0; iter < cfg.max_iterations; ++iter) {
    if (fnorm < cfg.residual_tol) return s;
    symmetric_jacobian(a, b, s, jac);
    const Eigen::Vector3d step = jac.partialPivLu().solve(f);
    if (!step.allFinite()) return std::nullopt;
    double lambda = 1.0;
    bool accepted = false;
    for (int halvings = 0; halvings < 25; ++halvings) {
      const SymmetricSolution trial{s.e1 - lambda * step(0), s.e2 - lambda * step(1),
                                    s.c - lambda * step(2)};
      symmetric_system(a, b, trial, ftrial);
      const double tnorm = ftrial.lpNorm<Eigen::Infinity>();
      if (tnorm < fnorm) {
        s = trial;
        f = ftrial;
        fnorm = tnorm;
        accepted = true;
        break;
      }
      lambda *= 0.5;
    }
    if (!accepted) return std::nullopt;
  }
  return fnorm < cfg.residual_tol ? std::optional(s) : std::nullopt;
}

QesState make_sextic_state(double a, double b, double c, double energy,
                           std::vector<double> coeffs, Provenance prov) {
  QesState st;
  st.family = Family::sextic;
  st.energy = energy;
  st.parity = Parity::even;
  st.coeffs = std::move(coeffs);
  st.gauge = GaugeParams{a, b, c};
  st.provenance = prov;
  return st;
}

// Validation of an n=2 even candidate; real pairs via the real residuals,
// conjugate pairs via complex arithmetic on x = (e1 +- i sqrt(4e2-e1^2))/2.
bool validate_pair_solution(double a, double b, const SymmetricSolution& s) {
  const double disc = s.e1 * s.e1 - 4.0 * s.e2;
  if (disc >= 0.0) {
    const double root = std::sqrt(disc);
    const std::vector<double> xs{0.5 * (s.e1 - root), 0.5 * (s.e1 + root)};
    if (!pairwise_distinct(xs)) return false;
    for (double r : bethe_residuals(BetheRoots{xs}, a, b, s.c))
      if (std::abs(r) >= 1e-10) return false;
    return true;
  }
  const std::complex<double> x1(0.5 * s.e1, 0.5 * std::sqrt(-disc));
  const std::complex<double> x2 = std::conj(x1);
  const auto f = [&](std::complex<double> x) {
    return 1.0 / (x - std::conj(x)) - x * x * x + 3.0 * a * x * x + 2.0 * b * x + s.c;
  };
  (void)x2;
  return std::abs(f(x1)) < 1e-10;
}

}  // namespace

SexticFamilyResult sextic_family_solve(int n, Parity parity, double a, double b,
                                       MultistartConfig cfg, Exec exec) {
  SexticFamilyResult out;

  if (n == 0 && parity == Parity::even) {
    auto st = make_sextic_state(a, b, 0.0, -2.0 * b, {1.0}, Provenance::closed_form);
    out.states.push_back(std::move(st));
    return out;
  }
  if (n == 1 && parity == Parity::odd) {
    auto st = make_sextic_state(a, b, 0.0, -6.0 * b, {0.0, 1.0}, Provenance::closed_form);
    st.parity = Parity::odd;
    out.states.push_back(std::move(st));
    return out;
  }
  if (n == 1 && parity == Parity::even) {
    for (double c : real_quartic_roots(1.0, 2.0 * b, 3.0 * a, -1.0)) {
      if (std::abs(c) < 1e-12) continue;
      const BetheRoots roots{{1.0 / c}};
      double worst = 0.0;
      for (double r : bethe_residuals(roots, a, b, c)) worst = std::max(worst, std::abs(r));
      if (worst >= 1e-10 || !sextic_matching_filter(roots, c, Parity::even)) {
        ++out.rejected;
        continue;
      }
      const double energy = sextic_energy(roots, a, b, c, 1);
      out.states.push_back(
          make_sextic_state(a, b, c, energy, {-1.0 / c, 1.0}, Provenance::closed_form));
    }
  } else if (n == 2 && parity == Parity::odd) {
    for (double c : real_quartic_roots(2.0, 2.0 * b, 3.0 * a, -1.0)) {
      if (std::abs(c) < 1e-12) continue;
      const auto roots = BetheRoots::checked({0.0, 1.0 / c});
      double worst = 0.0;
      for (double r : bethe_residuals(roots, a, b, c)) worst = std::max(worst, std::abs(r));
      if (worst >= 1e-10 || !sextic_matching_filter(roots, c, Parity::odd)) {
        ++out.rejected;
        continue;
      }
      const double energy = sextic_energy(roots, a, b, c, 2);
      auto st = make_sextic_state(a, b, c, energy, {0.0, -1.0 / c, 1.0}, Provenance::closed_form);
      st.parity = Parity::odd;
      out.states.push_back(std::move(st));
    }
  } else if (n == 2 && parity == Parity::even) {
    const double radius = 2.0 + std::abs(a) + std::sqrt(1.0 + std::abs(b));
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> box(-radius, radius);
    std::vector<SymmetricSolution> starts(cfg.starts);
    for (auto& s : starts) s = SymmetricSolution{box(rng), box(rng), box(rng)};

    std::vector<std::optional<SymmetricSolution>> slot(cfg.starts);
    for_each_index(exec, cfg.starts, [&](int i) { slot[i] = newton_symmetric(starts[i], a, b, cfg); });

    std::vector<SymmetricSolution> accepted;
    for (const auto& res : slot) {
      if (!res) {
        ++out.failed_starts;
        continue;
      }
      const auto& s = *res;
      const double disc = s.e1 * s.e1 - 4.0 * s.e2;
      // Distinct roots; x=0 and x=1/c excluded per the family's definition.
      if (std::abs(disc) <= 1e-8 * (1.0 + s.e1 * s.e1 + 4.0 * std::abs(s.e2))) {
        ++out.rejected;
        continue;
      }
      if (std::abs(s.e2) <= 1e-8 * (1.0 + std::abs(s.e1))) {
        ++out.rejected;
        continue;
      }
      if (std::abs(s.c) > 1e-12) {
        const double at_inv_c = s.e2 * s.c * s.c - s.e1 * s.c + 1.0;
        if (std::abs(at_inv_c) <= 1e-8 * (1.0 + std::abs(s.e2 * s.c * s.c) + std::abs(s.e1 * s.c))) {
          ++out.rejected;
          continue;
        }
      }
      if (!validate_pair_solution(a, b, s)) {
        ++out.rejected;
        continue;
      }
      const bool dup = std::any_of(accepted.begin(), accepted.end(), [&](const SymmetricSolution& t) {
        return std::abs(t.e1 - s.e1) < cfg.dedup_tol && std::abs(t.e2 - s.e2) < cfg.dedup_tol &&
               std::abs(t.c - s.c) < cfg.dedup_tol;
      });
      if (dup) continue;
      accepted.push_back(s);
      const double energy =
          2.0 * (s.e1 * s.e1 - 2.0 * s.e2) - 6.0 * a * s.e1 - 10.0 * b - s.c * s.c;
      out.states.push_back(
          make_sextic_state(a, b, s.c, energy, {s.e2, -s.e1, 1.0}, Provenance::bethe));
    }
  } else {
    throw std::invalid_argument("sextic_family_solve: no worked family for (n=" +
                                std::to_string(n) + ", " + parity_name(parity) + ")");
  }

  std::sort(out.states.begin(), out.states.end(),
            [](const QesState& l, const QesState& r) {
              if (l.energy != r.energy) return l.energy < r.energy;
              return l.gauge.c < r.gauge.c;
            });
  return out;
}

}  // namespace qes
