// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "erange/analysis.hpp"
#include "erange/analytic_squarewell.hpp"
#include "erange/error.hpp"
#include "erange/radial_solver.hpp"
#include "frozen_values.hpp"
#include "oracles.hpp"

using namespace erange;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kR = 1.0;
constexpr double kDepths[] = {4.4, 4.45, 4.4934, 4.515};

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

Window closed_window() { return {0.005, 0.5}; }
Window open_window(double hi) { return {0.0, hi}; }

double beta_negative_branch(double a) { return solve_beta_for_target_a(kR, a, {1e-3, kPi / 2 - 1e-4}); }
double beta_positive_branch(double a) {
  return solve_beta_for_target_a(kR, a, {kPi / 2 + 1e-4, frozen::kFirstZero - 1e-9});
}

double max_dev(const std::vector<ErrorReport>& reps, ExpansionKind kind) {
  for (const auto& r : reps)
    if (r.kind == kind) return r.max_abs_dev;
  throw Error(Errc::precondition, "kind missing from report");
}

// -- criteria ---------------------------------------------------------------

void scattering_length_table(Outcome& o) {
  const double a44 = scattering_length({kR, 4.4});
  const double a445 = scattering_length({kR, 4.45});
  const double a_zero = scattering_length({kR, 4.4934});
  const double a4515 = scattering_length({kR, 4.515});
  o.require(std::abs(a44 - 0.2963) <= 2e-4, "a(4.4)");
  o.require(std::abs(a445 - 0.1633) <= 2e-4, "a(4.45)");
  o.require(std::abs(a_zero) < 5e-4, "a(4.4934)");
  o.require(std::abs(a4515 - frozen::kA_4p515) <= 1e-12, "a(4.515) frozen");
  o.require(std::abs(a4515 - oracle::scattering_length(kR, 4.515)) <= 1e-12, "a(4.515) oracle");
  o.require(std::abs(a4515 - (-0.21)) > 0.05, "a(4.515) must not be -0.21");
  o.detail << "a/R = " << a44 << ", " << a445 << ", " << sci(a_zero) << ", " << a4515;
}

void zero_energy_pole(Outcome& o) {
  const double below = scattering_length({kR, kPi / 2 - 1e-4});
  const double above = scattering_length({kR, kPi / 2 + 1e-4});
  o.require(std::abs(below) > 1e3 * kR && std::abs(above) > 1e3 * kR, "magnitude");
  o.require(below < 0.0 && above > 0.0, "sign change");
  o.detail << "a(pi/2 -+ 1e-4) = " << below << ", " << above;
}

void solver_vs_closed_form(Outcome& o) {
  double worst = 0.0;
  for (double beta : kDepths) {
    const SquareWell w{kR, beta};
    for (double kk : kk_grid(closed_window(), 20)) {
      const double k = std::sqrt(kk);
      SolverConfig cfg;
      cfg.step = 1e-4 * kR;
      const double diff =
          std::abs(solve_phase(w, k, cfg).tan_delta_over_k - exact_tan_delta_over_k(w, k));
      worst = std::max(worst, diff);
    }
  }
  o.require(worst < 1e-6 * kR, "max |tan(delta)/k difference| at h = 1e-4");

  // convergence order from steps coarse enough to sit above roundoff
  double lo = 1e300, hi = 0.0;
  for (double beta : kDepths) {
    const SquareWell w{kR, beta};
    for (double kk : {0.005, 0.1, 0.3, 0.5}) {
      const double k = std::sqrt(kk);
      const double exact = exact_tan_delta_over_k(w, k);
      auto err = [&](double h) {
        SolverConfig cfg;
        cfg.step = h;
        return std::abs(solve_phase(w, k, cfg).tan_delta_over_k - exact);
      };
      const double ratio = err(0.0025) / err(0.00125);
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
  }
  o.require(lo >= 16.0 * 0.8 && hi <= 16.0 * 1.2, "halving ratio within 16 +/- 20%");
  o.detail << "max diff " << sci(worst) << "; halving h from 0.0025 gives ratios " << lo << ".."
           << hi;
}

void integral_identity_closure(Outcome& o) {
  double worst_sq = 0.0, worst_smooth = 0.0;
  for (double beta : kDepths) {
    const SquareWell w{kR, beta};
    for (double kk : kk_grid(closed_window(), 10)) {
      const double k = std::sqrt(kk);
      const double t = exact_tan_delta_over_k(w, k);
      const double rel = std::abs(integral_identity(w, k) - t) / std::max(kR, std::abs(t));
      worst_sq = std::max(worst_sq, rel);
    }
  }
  const PotentialSpec smooth[] = {GaussianWell{3.0, kR}, ExponentialWell{2.0, kR}};
  for (const auto& s : smooth) {
    for (double kk : kk_grid(closed_window(), 10)) {
      const double k = std::sqrt(kk);
      const double t = solve_phase(s, k).tan_delta_over_k;
      worst_smooth = std::max(worst_smooth, std::abs(integral_identity(s, k) - t));
    }
  }
  o.require(worst_sq < 1e-8, "square well");
  o.require(worst_smooth < 1e-6, "gaussian/exponential");
  o.detail << "square well " << sci(worst_sq) << " (relative), smooth wells " << sci(worst_smooth);
}

void coefficient_oracle(Outcome& o) {
  double worst = 0.0, worst_recip = 0.0;
  for (double beta : {1.0, 1.9006, 4.4, 4.45, 4.4934, 4.515}) {
    const double a = oracle::scattering_length(kR, beta);
    const double slope = oracle::richardson_slope(
        [&](double s) { return oracle::tan_delta_over_k(kR, beta, std::sqrt(s)); }, -a, 1e-3);
    const auto c = taylor_coefficients({kR, beta});
    worst = std::max(worst, std::abs(slope - c.b_small) / std::abs(c.b_small));
    if (c.a != 0.0) {
      o.require(c.c_large.has_value(), "c_large present");
      if (c.c_large)
        worst_recip = std::max(worst_recip,
                               std::abs(*c.c_large - (-c.b_small / (c.a * c.a))) / std::abs(*c.c_large));
    }
  }
  o.require(worst <= 1e-6, "finite-difference slope");
  o.require(worst_recip <= 1e-12, "c_large = -b_small/a^2");
  o.detail << "slope rel err " << sci(worst) << ", reciprocal rel err " << sci(worst_recip);
}

constexpr ExpansionKind kTanPair[] = {ExpansionKind::ReciprocalSmallA, ExpansionKind::ImprovedSmallA};
constexpr ExpansionKind kKcotPair[] = {ExpansionKind::TextbookLargeA, ExpansionKind::ImprovedLargeA};

void figure2_ordering(Outcome& o) {
  for (double beta : kDepths) {
    const auto reps =
        compare_expansions({kR, beta}, kTanPair, ParamsPolicy::use_range_R, open_window(0.5), 100);
    const double basic = max_dev(reps, ExpansionKind::ReciprocalSmallA);
    const double improved = max_dev(reps, ExpansionKind::ImprovedSmallA);
    std::ostringstream name;
    name << "betaR=" << beta;
    if (beta == 4.4934)
      o.require(std::abs(improved - basic) <= 1e-8, name.str() + " equal");
    else
      o.require(improved < basic, name.str() + " er23 < er22");
    o.detail << name.str() << " " << sci(improved) << "/" << sci(basic) << " ";
  }
}

void figure3_ordering(Outcome& o) {
  const std::pair<double, double> wells[] = {{2.54, beta_positive_branch(2.54)},
                                             {-3.14, beta_negative_branch(-3.14)}};
  for (const auto& [a, beta] : wells) {
    const auto reps =
        compare_expansions({kR, beta}, kKcotPair, ParamsPolicy::use_range_R, open_window(0.5), 100);
    const double basic = max_dev(reps, ExpansionKind::TextbookLargeA);
    const double improved = max_dev(reps, ExpansionKind::ImprovedLargeA);
    o.require(improved <= basic, "a/R=" + std::to_string(a));
    o.detail << "a/R=" << a << " " << sci(improved) << "/" << sci(basic) << " ";
  }
}

void figure4_ordering(Outcome& o) {
  const std::pair<double, double> wells[] = {{-1.0, beta_negative_branch(-1.0)}, {1.0, kPi}};
  for (const auto& [a, beta] : wells) {
    const auto tan_reps =
        compare_expansions({kR, beta}, kTanPair, ParamsPolicy::use_range_R, open_window(0.5), 100);
    const auto kcot_reps =
        compare_expansions({kR, beta}, kKcotPair, ParamsPolicy::use_range_R, open_window(0.5), 100);
    const double t_basic = max_dev(tan_reps, ExpansionKind::ReciprocalSmallA);
    const double t_impr = max_dev(tan_reps, ExpansionKind::ImprovedSmallA);
    const double k_basic = max_dev(kcot_reps, ExpansionKind::TextbookLargeA);
    const double k_impr = max_dev(kcot_reps, ExpansionKind::ImprovedLargeA);
    o.require(t_impr <= t_basic, "tan space a/R=" + std::to_string(a));
    o.require(k_impr <= k_basic, "kcot space a/R=" + std::to_string(a));
    o.detail << "a/R=" << a << " er23/er22 " << sci(t_impr) << "/" << sci(t_basic) << ", er24/er1 "
             << sci(k_impr) << "/" << sci(k_basic) << " ";
  }
}

void round_trip_fit(Outcome& o) {
  // the named depths with nonzero a, fitted in tan(delta)/k against b_small
  for (double beta : {4.4, 4.45, 4.515}) {
    const SquareWell w{kR, beta};
    const auto c = taylor_coefficients(w);
    double slope_err[2] = {0.0, 0.0};
    for (int j = 0; j < 2; ++j) {
      const Window win = open_window(j == 0 ? 0.05 : 0.01);
      std::vector<PhaseRecord> recs;
      for (double kk : kk_grid(win, 100)) recs.push_back(exact_phase(w, std::sqrt(kk)));
      const auto fit = fit_effective_range(recs, ExpansionKind::InverseOfTextbook, win);
      slope_err[j] = std::abs(fit.line.slope - c.b_small) / std::abs(c.b_small);
      if (j == 0) o.require(std::abs(fit.params.a - c.a) <= 1e-3 * kR, "a at betaR=" + std::to_string(beta));
    }
    std::ostringstream name;
    name << "betaR=" << beta;
    o.detail << name.str() << " slope err " << 100.0 * slope_err[0] << "% -> " << 100.0 * slope_err[1]
             << "% ";
    o.require(slope_err[0] <= 0.02, "slope within 2% at " + name.str());
    o.require(slope_err[0] >= 4.0 * slope_err[1], "4x tightening at " + name.str());
  }
}

void property_suites(Outcome& o) {
  std::mt19937_64 rng(2024);
  auto uniform = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };

  double recip = 0.0;
  for (int i = 0; i < 2000; ++i) {
    const double beta_r = uniform(0.2, 9.0);
    if (near_resonance(beta_r, 1e-3)) continue;
    const auto rec = exact_phase({kR, beta_r}, uniform(0.01, 2.0));
    if (rec.flags.any()) continue;
    recip = std::max(recip, std::abs(rec.tan_delta_over_k * rec.k_cot_delta - 1.0));
  }
  o.require(recip <= 1e-12, "phase record reciprocity");

  double norm = 0.0;
  const PotentialSpec specs[] = {SquareWell{kR, 4.4}, GaussianWell{3.0, kR}, ExponentialWell{2.0, kR}};
  for (const auto& s : specs) {
    for (int i = 0; i < 4; ++i) {
      const double k = uniform(0.05, 1.0);
      SolverConfig base, scaled;
      base.step = scaled.step = 1e-3;
      scaled.initial_scale = std::exp(uniform(std::log(1e-3), std::log(1e3)));
      norm = std::max(norm, std::abs(solve_phase(s, k, base).delta - solve_phase(s, k, scaled).delta));
    }
  }
  o.require(norm <= 1e-12, "normalisation independence");

  double inv = 0.0;
  for (int i = 0; i < 2000; ++i) {
    const double a = (uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0) * std::exp(uniform(std::log(1e-6), std::log(1e3)));
    const double b = uniform(-10.0, 10.0);
    const auto once = reciprocal_coefficients(a, b);
    const auto twice = reciprocal_coefficients(-once.intercept, once.slope);
    inv = std::max({inv, std::abs(-twice.intercept - a) / std::abs(a),
                    std::abs(twice.slope - b) / std::max(1.0, std::abs(b))});
  }
  o.require(inv <= 1e-12, "reciprocal round trip");

  double scale = 0.0;
  const std::pair<SquareWell, ExpansionKind> fits[] = {
      {{kR, 4.45}, ExpansionKind::ImprovedSmallA}, {{kR, 1.9}, ExpansionKind::ImprovedLargeA}};
  for (int i = 0; i < 10; ++i) {
    const double lambda = std::exp(uniform(std::log(0.2), std::log(5.0)));
    for (const auto& [w, kind] : fits) {
      const SquareWell ws{w.range * lambda, w.depth / lambda};
      std::vector<PhaseRecord> r1, r2;
      for (int j = 1; j <= 30; ++j) {
        const double k = std::sqrt(0.02 * j / 30.0);
        r1.push_back(exact_phase(w, k));
        r2.push_back(exact_phase(ws, k / lambda));
      }
      const auto f1 = fit_effective_range(r1, kind, {0.0, 0.0201});
      const auto f2 = fit_effective_range(r2, kind, {0.0, 0.0201 / (lambda * lambda)});
      scale = std::max({scale, std::abs(f2.params.a / (lambda * f1.params.a) - 1.0),
                        std::abs(f2.params.r0 / (lambda * f1.params.r0) - 1.0)});
    }
  }
  o.require(scale <= 1e-10, "fit scale consistency");
  o.detail << "reciprocity " << sci(recip) << ", normalisation " << sci(norm) << ", reciprocal "
           << sci(inv) << ", scaling " << sci(scale);
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "scattering-length table", 1.0, scattering_length_table},
      {2, "zero-energy bound-state pole", 1.0, zero_energy_pole},
      {3, "Numerov vs closed form", 10.0, solver_vs_closed_form},
      {4, "integral identity closure", 10.0, integral_identity_closure},
      {5, "low-energy coefficient oracle", 1.0, coefficient_oracle},
      {6, "tan(delta)/k ordering at the four depths", 1.0, figure2_ordering},
      {7, "k cot(delta) ordering at a/R = 2.54, -3.14", 1.0, figure3_ordering},
      {8, "ordering at a/R = -1, +1", 1.0, figure4_ordering},
      {9, "round-trip fit", 1.0, round_trip_fit},
      {10, "property suites", 10.0, property_suites},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "[exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_s) {
      o.pass = false;
      o.detail << "[over time budget " << c.budget_s << " s]";
    }
    if (!o.pass) ++failures;
    std::printf("%s %2d %s (%.3f s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs,
                o.detail.str().c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures,
              std::size(criteria));
  return failures == 0 ? 0 : 1;
}
