#include "qes/quartic.hpp"

#include <algorithm>
#include <cmath>

#include "qes/algebra.hpp"
#include "qes/poly.hpp"

namespace qes {

std::tuple<double, double, double> quartic_potential_coeffs(double a, double b, int n) {
  if (n < 0) throw std::invalid_argument("quartic_potential_coeffs: n must be >= 0");
  QuarticModel m{a, b, n};
  return {m.s(), m.r(), m.q()};
}

QuarticSectorResult solve_quartic_sector(double a, double b, int n) {
  if (n < 0 || n > 16) throw std::invalid_argument("solve_quartic_sector: need 0 <= n <= 16");
  const auto eig = diagonalize(quartic_gauge_operator(a, b, RepDimension(n)));
  QuarticSectorResult out;
  out.complex_pairs = eig.complex_pairs;
  out.states.reserve(eig.pairs.size());
  for (const auto& pair : eig.pairs) {
    QesState st;
    st.family = Family::quartic;
    st.energy = pair.eigenvalue;
    st.coeffs = poly::monic(pair.eigenvector);
    st.gauge = GaugeParams{a, b, 0.0};
    st.provenance = Provenance::matrix;
    out.states.push_back(std::move(st));
  }
  return out;
}

bool matching_filter(QesState& state, Parity parity, double tol) {
  const double v0 = state.coeffs.empty() ? 0.0 : state.coeffs[0];
  const double v1 = state.coeffs.size() > 1 ? state.coeffs[1] : 0.0;
  const double b = state.family == Family::quartic ? state.gauge.b : state.gauge.c;
  const double scale = std::max({1.0, std::abs(v0), std::abs(v1)});
  const double residual = parity == Parity::even ? v1 + b * v0 : v0;
  if (std::abs(residual) > tol * scale) return false;
  state.parity = parity;
  return true;
}

QuarticFamilyResult quartic_family_solve(int n, Parity parity, FixedParam fixed) {
  if (fixed.name != 'a' && fixed.name != 'b')
    throw std::invalid_argument("quartic_family_solve: fixed parameter must be 'a' or 'b'");
  QuarticFamilyResult out;
  QesState st;
  st.family = Family::quartic;
  st.parity = parity;
  st.provenance = Provenance::closed_form;

  if (n == 0 && parity == Parity::even) {
    if (fixed.name != 'a')
      throw std::invalid_argument("quartic_family_solve: (0,even) requires b=0; fix a");
    const double a = fixed.value;
    st.energy = -2.0 * a;
    st.coeffs = {1.0};
    st.gauge = GaugeParams{a, 0.0, 0.0};
    st.node_count = 0;
    out.states.push_back(std::move(st));
    return out;
  }
  if (n == 1 && parity == Parity::odd) {
    if (fixed.name != 'a')
      throw std::invalid_argument("quartic_family_solve: (1,odd) requires b=0; fix a");
    const double a = fixed.value;
    st.energy = -6.0 * a;
    st.coeffs = {0.0, 1.0};
    st.gauge = GaugeParams{a, 0.0, 0.0};
    st.node_count = 1;
    out.states.push_back(std::move(st));
    return out;
  }
  if (n == 1 && parity == Parity::even) {
    if (fixed.name != 'b')
      throw std::invalid_argument("quartic_family_solve: (1,even) is parameterized by b; fix b");
    const double b = fixed.value;
    if (b == 0.0) throw std::invalid_argument("quartic_family_solve: (1,even) needs b != 0");
    const double a = -(b * b * b + 1.0) / (2.0 * b);
    st.energy = (2.0 * b * b * b + 1.0) / b;
    st.coeffs = {-1.0 / b, 1.0};
    st.gauge = GaugeParams{a, b, 0.0};
    st.node_count = b > 0.0 ? 0 : 2;
    out.degenerate = (a * a == b);  // b=1: both sign branches coincide
    out.states.push_back(std::move(st));
    return out;
  }
  throw NoClosedFormError("quartic_family_solve: no closed form implemented for (n=" +
                          std::to_string(n) + ", " + parity_name(parity) + ")");
}

namespace {

double constraint_residual(const std::vector<double>& coeffs, Parity parity, double b) {
  const double v0 = coeffs.empty() ? 0.0 : coeffs[0];
  const double v1 = coeffs.size() > 1 ? coeffs[1] : 0.0;
  return parity == Parity::even ? v1 + b * v0 : v0;
}

double dot(const std::vector<double>& l, const std::vector<double>& r) {
  double acc = 0.0;
  for (std::size_t i = 0; i < std::min(l.size(), r.size()); ++i) acc += l[i] * r[i];
  return acc;
}

struct Branch {
  double energy;
  std::vector<double> coeffs;
  double residual;
};

// Eigen-branch at parameter b nearest in energy to the guess, sign-aligned to
// the previous coefficient vector so the residual varies continuously.
bool track_branch(double a, double b, int n, Parity parity, const Branch& prev, Branch& cur) {
  const auto sector = solve_quartic_sector(a, b, n);
  if (sector.states.empty()) return false;
  const QesState* best = nullptr;
  double best_gap = 0.0;
  for (const auto& st : sector.states) {
    const double gap = std::abs(st.energy - prev.energy);
    if (!best || gap < best_gap) {
      best = &st;
      best_gap = gap;
    }
  }
  cur.energy = best->energy;
  cur.coeffs = best->coeffs;
  if (dot(cur.coeffs, prev.coeffs) < 0.0)
    for (auto& v : cur.coeffs) v = -v;
  cur.residual = constraint_residual(cur.coeffs, parity, b);
  return true;
}

}  // namespace

std::vector<QesState> quartic_constraint_search(int n, Parity parity, double a,
                                                ConstraintSearchConfig cfg) {
  if (cfg.step <= 0.0 || cfg.b_max <= cfg.b_min)
    throw std::invalid_argument("quartic_constraint_search: bad b range/step");
  std::vector<QesState> found;

  auto initial_branches = [&](double b) {
    std::vector<Branch> branches;
    for (const auto& st : solve_quartic_sector(a, b, n).states)
      branches.push_back(Branch{st.energy, st.coeffs, constraint_residual(st.coeffs, parity, b)});
    return branches;
  };

  std::vector<Branch> prev = initial_branches(cfg.b_min);
  double b_prev = cfg.b_min;
  const int steps = static_cast<int>(std::ceil((cfg.b_max - cfg.b_min) / cfg.step));
  for (int i = 1; i <= steps; ++i) {
    const double b_cur = std::min(cfg.b_min + i * cfg.step, cfg.b_max);
    std::vector<Branch> next;
    for (const auto& br : prev) {
      Branch cur;
      if (!track_branch(a, b_cur, n, parity, br, cur)) continue;
      if (br.residual == 0.0 || cur.residual == 0.0 || (br.residual < 0.0) != (cur.residual < 0.0)) {
        // Bisection on the tracked branch's residual.
        double lo = b_prev, hi = b_cur;
        Branch at_lo = br, at_hi = cur;
        while (hi - lo > cfg.refine_tol) {
          const double mid = 0.5 * (lo + hi);
          Branch at_mid;
          if (!track_branch(a, mid, n, parity, at_lo, at_mid)) break;
          if ((at_lo.residual < 0.0) != (at_mid.residual < 0.0)) {
            hi = mid;
            at_hi = at_mid;
          } else {
            lo = mid;
            at_lo = at_mid;
          }
        }
        // Secant polish on the bracketing residuals, then re-evaluate.
        double b_root = 0.5 * (lo + hi);
        if (at_hi.residual != at_lo.residual) {
          const double secant = lo - at_lo.residual * (hi - lo) / (at_hi.residual - at_lo.residual);
          if (secant >= lo && secant <= hi) b_root = secant;
        }
        Branch at_root;
        if (track_branch(a, b_root, n, parity, at_lo, at_root)) {
          QesState st;
          st.family = Family::quartic;
          st.energy = at_root.energy;
          st.coeffs = poly::monic(at_root.coeffs);
          st.gauge = GaugeParams{a, b_root, 0.0};
          st.provenance = Provenance::matrix;
          if (matching_filter(st, parity)) {
            const bool dup =
                std::any_of(found.begin(), found.end(), [&](const QesState& f) {
                  return std::abs(f.gauge.b - st.gauge.b) < 1e-6 &&
                         std::abs(f.energy - st.energy) < 1e-6;
                });
            if (!dup) found.push_back(std::move(st));
          }
        }
      }
      next.push_back(std::move(cur));
    }
    // Branches may appear when complex pairs turn real; refresh the set.
    if (next.size() != prev.size()) next = initial_branches(b_cur);
    prev = std::move(next);
    b_prev = b_cur;
  }
  std::sort(found.begin(), found.end(),
            [](const QesState& l, const QesState& r) { return l.gauge.b < r.gauge.b; });
  return found;
}

}  // namespace qes
