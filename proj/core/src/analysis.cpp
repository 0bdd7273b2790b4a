#include "erange/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "erange/analytic_squarewell.hpp"
#include "erange/error.hpp"

namespace erange {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBisectionTolerance = 1e-12;
constexpr int kBisectionMaxIterations = 200;
constexpr int kSecantIterations = 8;

double a_at(double R, double beta_r) { return scattering_length(SquareWell{R, beta_r / R}); }

std::vector<double> poles_in(double lo, double hi) {
  std::vector<double> out;
  for (double n = std::max(0.0, std::floor(lo / kPi - 0.5)); (n + 0.5) * kPi <= hi; n += 1.0) {
    const double p = (n + 0.5) * kPi;
    if (p >= lo) out.push_back(p);
  }
  return out;
}

std::string bracket_context(double lo, double hi) {
  const double below = std::max(0.5 * kPi, (std::floor(lo / kPi - 0.5) + 0.5) * kPi);
  const double above = (std::floor(hi / kPi - 0.5) + 1.5) * kPi;
  std::ostringstream os;
  os.precision(10);
  os << "nearest poles at beta R = " << below << ", " << above << "; zeros at";
  for (double z : scattering_length_zeros(above + kPi)) {
    if (z > lo - 2.0 * kPi && z < hi + 2.0 * kPi) os << ' ' << z;
  }
  if (lo < 1.0) os << " 0";
  return os.str();
}

}  // namespace

void validate(const Window& w) {
  if (!(w.hi > w.lo) || !(w.lo >= 0.0) || !std::isfinite(w.hi)) {
    throw Error(Errc::precondition, "k^2 window needs 0 <= lo < hi");
  }
}

std::vector<double> kk_grid(const Window& w, std::size_t n) {
  validate(w);
  std::vector<double> out;
  out.reserve(n);
  if (w.lo <= 0.0) {
    if (n < 1) throw Error(Errc::precondition, "grid needs n >= 1");
    for (std::size_t i = 1; i <= n; ++i) out.push_back(w.hi * static_cast<double>(i) / n);
  } else {
    if (n < 2) throw Error(Errc::precondition, "grid needs n >= 2");
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(w.lo + (w.hi - w.lo) * static_cast<double>(i) / static_cast<double>(n - 1));
    }
  }
  return out;
}

double role_value(const PhaseRecord& rec, ValueRole role) {
  switch (role) {
    case ValueRole::tan_delta_over_k: return rec.tan_delta_over_k;
    case ValueRole::k_cot_delta: return rec.k_cot_delta;
    case ValueRole::minus_delta_over_k: return -rec.delta / rec.k;
  }
  return 0.0;
}

ScanPoint scan_point(double R, double beta_r) {
  ScanPoint p;
  p.beta_r = beta_r;
  if (near_resonance(beta_r, kScanPoleTolerance)) {
    p.pole = true;
  } else {
    p.a_over_r = a_at(R, beta_r) / R;
  }
  return p;
}

std::vector<ScanPoint> scattering_length_scan(double R, double beta_max, std::size_t n) {
  if (n < 2) throw Error(Errc::precondition, "scan needs n >= 2");
  if (!(beta_max > 0.0) || !(R > 0.0)) throw Error(Errc::precondition, "scan needs R, beta_max > 0");
  std::vector<ScanPoint> out;
  out.reserve(n);
  const double top = beta_max * R;
  for (std::size_t i = 1; i <= n; ++i) {
    out.push_back(scan_point(R, top * static_cast<double>(i) / static_cast<double>(n)));
  }
  return out;
}

std::vector<double> scattering_length_zeros(double beta_r_max) {
  // sin x - x cos x shares the roots of tan x = x and has no poles.
  auto g = [](double x) { return std::sin(x) - x * std::cos(x); };
  std::vector<double> out;
  for (int n = 1; n * kPi < beta_r_max; ++n) {
    double lo = n * kPi, hi = (n + 0.5) * kPi;
    const double glo = g(lo);
    for (int it = 0; it < kBisectionMaxIterations && hi - lo > 1e-15 * hi; ++it) {
      const double mid = 0.5 * (lo + hi);
      ((g(mid) > 0.0) == (glo > 0.0) ? lo : hi) = mid;
    }
    const double root = 0.5 * (lo + hi);
    if (root < beta_r_max) out.push_back(root);
  }
  return out;
}

double solve_beta_for_target_a(double R, double a_target, Window bracket) {
  if (!(R > 0.0) || !std::isfinite(a_target)) {
    throw Error(Errc::precondition, "inverse solve needs R > 0 and a finite target");
  }
  double lo = bracket.lo, hi = bracket.hi;
  if (!(hi > lo) || !(lo >= 0.0)) throw Error(Errc::bracket, "bracket needs 0 <= lo < hi");
  const auto poles = poles_in(lo, hi);
  if (!poles.empty()) {
    std::ostringstream os;
    os.precision(10);
    os << "bracket [" << lo << ", " << hi << "] contains pole(s) at beta R =";
    for (double p : poles) os << ' ' << p;
    throw Error(Errc::bracket, os.str());
  }

  auto f = [&](double x) { return a_at(R, x) - a_target; };
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo / R;
  if (fhi == 0.0) return hi / R;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw Error(Errc::bracket, "a(beta) - a_target has no sign change in [" + std::to_string(lo) +
                                   ", " + std::to_string(hi) + "]; " + bracket_context(lo, hi));
  }

  for (int it = 0; it < kBisectionMaxIterations && hi - lo > kBisectionTolerance; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid / R;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }

  // Secant polish inside the final bracket.
  double x0 = lo, f0 = flo, x1 = hi, f1 = fhi;
  double best = std::abs(f0) < std::abs(f1) ? x0 : x1;
  double fbest = std::min(std::abs(f0), std::abs(f1));
  for (int it = 0; it < kSecantIterations && f1 != f0; ++it) {
    const double x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
    if (!(x2 >= lo && x2 <= hi)) break;
    const double f2 = f(x2);
    if (std::abs(f2) < fbest) {
      best = x2;
      fbest = std::abs(f2);
    }
    if (f2 == 0.0) break;
    x0 = x1;
    f0 = f1;
    x1 = x2;
    f1 = f2;
  }

  if (fbest > 1e-10 * std::max(R, std::abs(a_target))) {
    throw Error(Errc::no_convergence,
                "inverse solve residual " + std::to_string(fbest) + " above tolerance");
  }
  return best / R;
}

ErFitResult fit_effective_range(std::span<const PhaseRecord> records, ExpansionKind kind,
                                Window window) {
  validate(window);
  const ValueRole role = value_role(kind);

  std::vector<double> xs, ys;
  for (const auto& rec : records) {
    const double kk = rec.k * rec.k;
    if (!window.contains(kk)) continue;
    if (role == ValueRole::k_cot_delta && rec.flags.pole_near_kcot) {
      throw Error(Errc::precondition, "tan(delta) ~ 0 inside the window; k cot(delta) has a pole");
    }
    if (rec.flags.any()) continue;
    xs.push_back(kk);
    ys.push_back(role_value(rec, role));
  }
  const std::size_t n = xs.size();
  if (n < 3) {
    throw Error(Errc::precondition,
                "fit needs >= 3 unflagged records in the window, got " + std::to_string(n));
  }

  double xm = 0.0, ym = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    xm += xs[i];
    ym += ys[i];
  }
  xm /= static_cast<double>(n);
  ym /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - xm) * (xs[i] - xm);
    sxy += (xs[i] - xm) * (ys[i] - ym);
  }
  if (!(sxx > 0.0)) throw Error(Errc::precondition, "fit needs distinct k^2 values");

  ErFitResult res;
  res.kind = kind;
  res.window = window;
  res.n_points = n;
  res.line.slope = sxy / sxx;
  res.line.intercept = ym - res.line.slope * xm;
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = ys[i] - (res.line.intercept + res.line.slope * xs[i]);
    ss += r * r;
  }
  res.rms_residual = std::sqrt(ss / static_cast<double>(n));
  res.params = params_from_coefficients(kind, res.line);
  return res;
}

std::vector<ErrorReport> compare_expansions(const SquareWell& well,
                                            std::span<const ExpansionKind> kinds,
                                            ParamsPolicy policy, Window window, std::size_t n) {
  validate(PotentialSpec{well});
  validate(window);
  if (!(window.hi < well.depth * well.depth)) {
    throw Error(Errc::precondition, "comparison window must satisfy k^2 < beta^2");
  }

  const auto grid = kk_grid(window, n);
  std::vector<PhaseRecord> exact;
  exact.reserve(grid.size());
  for (double kk : grid) exact.push_back(exact_phase(well, std::sqrt(kk)));

  const double a = scattering_length(well);
  std::vector<ErrorReport> reports;
  reports.reserve(kinds.size());
  for (ExpansionKind kind : kinds) {
    ErrorReport rep;
    rep.kind = kind;
    rep.window = window;
    rep.params = policy == ParamsPolicy::use_range_R
                     ? ErParams{a, well.range}
                     : fit_effective_range(exact, kind, window).params;
    const auto coeff = expansion_coefficients(kind, rep.params);
    const ValueRole role = value_role(kind);

    double sum = 0.0;
    std::size_t used = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const auto& rec = exact[i];
      DeviationSample s;
      s.kk = grid[i];
      s.flagged = (role == ValueRole::k_cot_delta && rec.flags.pole_near_kcot) ||
                  (role != ValueRole::k_cot_delta && rec.flags.pole_near_tan);
      s.exact = role_value(rec, role);
      s.approx = coeff.intercept + coeff.slope * grid[i];
      if (s.flagged) {
        ++rep.n_flagged;
      } else {
        const double dev = std::abs(s.exact - s.approx);
        rep.max_abs_dev = std::max(rep.max_abs_dev, dev);
        sum += dev;
        ++used;
      }
      rep.samples.push_back(s);
    }
    rep.mean_abs_dev = used > 0 ? sum / static_cast<double>(used) : 0.0;
    reports.push_back(std::move(rep));
  }
  return reports;
}

}  // namespace erange
