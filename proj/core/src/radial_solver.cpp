#include "erange/radial_solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "erange/analytic_squarewell.hpp"
#include "erange/error.hpp"
#include "erange/quadrature.hpp"

namespace erange {

namespace {

constexpr double kDefaultStepFraction = 1e-4;
constexpr double kMaxMatchingRangeMultiple = 1e4;
constexpr double kCosDeltaFloor = 1e-8;
constexpr std::size_t kNodeRetrySteps = 5;
constexpr int kNodeRetries = 8;

void check_momentum(double k) {
  if (!(k > 0.0) || !std::isfinite(k)) throw Error(Errc::precondition, "momentum k must be > 0");
}

double auto_matching_radius(const PotentialSpec& spec, double k, double tail_epsilon) {
  const double R = range_of(spec);
  const double threshold = tail_epsilon * std::max(k * k, 1.0 / (R * R));
  auto below = [&](double r) { return std::abs(evaluate_potential(spec, r)) < threshold; };

  double hi = R;
  while (!below(hi)) {
    hi *= 2.0;
    if (hi > kMaxMatchingRangeMultiple * R) {
      throw Error(Errc::configuration,
                  "potential tail does not fall below tail_epsilon within 1e4 R; not short-range");
    }
  }
  double lo = hi == R ? 0.0 : 0.5 * hi;
  if (lo == 0.0) return R;
  while (hi - lo > 1e-10 * hi) {
    const double mid = 0.5 * (lo + hi);
    (below(mid) ? hi : lo) = mid;
  }
  return std::max(hi, R);
}

}  // namespace

void validate(const SolverConfig& cfg) {
  if (cfg.step && !(*cfg.step > 0.0 && std::isfinite(*cfg.step))) {
    throw Error(Errc::configuration, "step h must be positive");
  }
  if (cfg.r_match && !(*cfg.r_match > 0.0 && std::isfinite(*cfg.r_match))) {
    throw Error(Errc::configuration, "explicit r_match must be positive");
  }
  if (!(cfg.tail_epsilon > 0.0 && cfg.tail_epsilon <= 1e-6)) {
    throw Error(Errc::configuration, "tail_epsilon must lie in (0, 1e-6]");
  }
  if (!(cfg.quadrature_tol > 0.0)) throw Error(Errc::configuration, "quadrature_tol must be > 0");
  if (!(cfg.initial_scale != 0.0 && std::isfinite(cfg.initial_scale))) {
    throw Error(Errc::configuration, "initial_scale must be finite and nonzero");
  }
}

double matching_radius(const PotentialSpec& spec, double k, const SolverConfig& cfg) {
  validate(spec);
  validate(cfg);
  check_momentum(k);
  const double R = range_of(spec);
  if (cfg.r_match) {
    if (has_compact_support(spec) && *cfg.r_match < R) {
      throw Error(Errc::configuration, "r_match lies inside the square well");
    }
    return *cfg.r_match;
  }
  if (has_compact_support(spec)) return R;
  return auto_matching_radius(spec, k, cfg.tail_epsilon);
}

double RadialSolution::value(double r) const {
  constexpr std::size_t kStencil = 6;
  if (!(r >= 0.0) || r > r_match() * (1.0 + 1e-14)) {
    throw Error(Errc::precondition, "interpolation radius outside [0, r_match]");
  }
  const double x = r / h;
  const auto last = u.size() - 1;
  std::size_t i = std::min(static_cast<std::size_t>(x), last);
  std::size_t start = i >= 2 ? i - 2 : 0;
  start = std::min(start, u.size() - kStencil);
  double sum = 0.0;
  for (std::size_t j = 0; j < kStencil; ++j) {
    const double xj = static_cast<double>(start + j);
    double basis = 1.0;
    for (std::size_t m = 0; m < kStencil; ++m) {
      if (m == j) continue;
      const double xm = static_cast<double>(start + m);
      basis *= (x - xm) / (xj - xm);
    }
    sum += basis * u[start + j];
  }
  return sum;
}

double RadialSolution::asymptotic_amplitude() const {
  const double k = record.k;
  const double theta = k * r_match() + record.delta;
  return k * u_match * std::sin(theta) + du_match * std::cos(theta);
}

RadialSolution integrate_radial(const PotentialSpec& spec, double k, const SolverConfig& cfg) {
  const double R = range_of(spec);
  const double r_target = matching_radius(spec, k, cfg);
  const double k2 = k * k;
  const bool compact = has_compact_support(spec);

  RadialSolution sol;
  double h = cfg.step.value_or(kDefaultStepFraction * R);
  std::size_t edge = 0;  // grid index of the square-well edge
  if (compact) {
    edge = std::max<std::size_t>(4, static_cast<std::size_t>(std::llround(R / h)));
    h = R / static_cast<double>(edge);
  }
  std::size_t n = std::max<std::size_t>(4, static_cast<std::size_t>(std::ceil(r_target / h - 1e-9)));
  sol.h = h;

  // g_i = V(r_i) - k^2; at the square-well edge the left limit is used when
  // matching there, and the mean of both sides when stepping across it.
  auto g_at = [&](std::size_t i, std::size_t match) {
    const double r = h * static_cast<double>(i);
    if (compact && i == edge) {
      const double left = evaluate_potential_left(spec, r);
      if (i == match) return left - k2;
      return 0.5 * (left + evaluate_potential(spec, r)) - k2;
    }
    return evaluate_potential(spec, r) - k2;
  };

  // The recurrence runs in extended precision: u'(r_match) comes from a
  // difference quotient that would otherwise lose ~log10(1/h) digits.
  using Ext = long double;
  const Ext h2 = static_cast<Ext>(h) * h;
  std::vector<double>& u = sol.u;
  std::vector<Ext> ue, f;  // u and g u
  ue.reserve(n + 1);
  f.reserve(n + 1);
  ue.push_back(0.0L);
  f.push_back(static_cast<Ext>(origin_r_times_v(spec)) * cfg.initial_scale);  // lim g u, r -> 0
  ue.push_back(static_cast<Ext>(cfg.initial_scale) * h);
  f.push_back(g_at(1, n) * ue[1]);
  Ext w_prev = ue[0] - h2 / 12 * f[0];
  Ext w = ue[1] - h2 / 12 * f[1];

  auto advance_to = [&](std::size_t target) {
    for (std::size_t i = ue.size() - 1; i < target; ++i) {
      const Ext w_next = 2 * w - w_prev + h2 * f[i];
      const Ext g = g_at(i + 1, target);
      const Ext u_next = w_next / (1 - h2 / 12 * g);
      ue.push_back(u_next);
      f.push_back(g * u_next);
      w_prev = w;
      w = w_next;
    }
  };

  for (int attempt = 0;; ++attempt) {
    advance_to(n);
    const Ext un = ue[n];
    // Fourth-order backward derivative using u'' = g u at the last three nodes.
    const Ext dun = (ue[n] - ue[n - 1]) / h + h / 24.0L * (7 * f[n] + 6 * f[n - 1] - f[n - 2]);
    const bool node = std::abs(k * un) < 1e-10L * std::abs(dun);
    if (node && !compact && attempt < kNodeRetries) {
      n += kNodeRetrySteps;
      continue;
    }
    sol.match_index = n;
    sol.u_match = static_cast<double>(un);
    sol.du_match = static_cast<double>(dun);
    break;
  }
  u.assign(ue.begin(), ue.begin() + static_cast<std::ptrdiff_t>(sol.match_index + 1));

  const double kr = k * sol.r_match();
  const double c = std::cos(kr), s = std::sin(kr);
  const double num = k * sol.u_match * c - sol.du_match * s;
  const double den = sol.du_match * c + k * sol.u_match * s;
  sol.record = make_phase_record(k, num, den);
  return sol;
}

PhaseRecord solve_phase(const PotentialSpec& spec, double k, const SolverConfig& cfg) {
  return integrate_radial(spec, k, cfg).record;
}

double integral_identity(const PotentialSpec& spec, double k, const SolverConfig& cfg) {
  validate(spec);
  validate(cfg);
  check_momentum(k);

  if (const auto* well = std::get_if<SquareWell>(&spec)) {
    const PhaseRecord rec = exact_phase(*well, k);
    const double cd = std::cos(rec.delta);
    if (std::abs(cd) < kCosDeltaFloor) {
      throw Error(Errc::degenerate_normalization, "cos(delta) ~ 0, free solution v degenerates");
    }
    if (well->depth == 0.0) return 0.0;
    const double beta2 = well->depth * well->depth;
    auto integrand = [&](double r) {
      const double u = interior_wavefunction(*well, k, rec.delta, r);
      const double v = std::sin(k * r) / (k * cd);
      return beta2 * u * v;  // -u v V with V = -beta^2
    };
    return integrate_adaptive(integrand, 0.0, well->range, cfg.quadrature_tol).value;
  }

  const RadialSolution sol = integrate_radial(spec, k, cfg);
  const double cd = std::cos(sol.record.delta);
  if (std::abs(cd) < kCosDeltaFloor) {
    throw Error(Errc::degenerate_normalization, "cos(delta) ~ 0, free solution v degenerates");
  }
  const double amplitude = sol.asymptotic_amplitude();
  auto integrand = [&](double r) {
    const double u = sol.value(r) / amplitude;
    const double v = std::sin(k * r) / (k * cd);
    return -u * v * evaluate_potential(spec, r);
  };

  // Panels of width ~R keep the adaptive subdivision local.
  const double R = range_of(spec);
  const double r_end = sol.r_match();
  const auto panels = static_cast<std::size_t>(std::max(1.0, std::ceil(r_end / R)));
  const double width = r_end / static_cast<double>(panels);
  const double panel_tol = cfg.quadrature_tol / static_cast<double>(panels);
  double total = 0.0;
  for (std::size_t p = 0; p < panels; ++p) {
    const double lo = width * static_cast<double>(p);
    const double hi = p + 1 == panels ? r_end : lo + width;
    total += integrate_adaptive(integrand, lo, hi, panel_tol).value;
  }
  return total;
}

}  // namespace erange
