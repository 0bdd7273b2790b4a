#include "erange/analytic_squarewell.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "erange/error.hpp"

namespace erange {

namespace {

constexpr double kSmallMomentum = 1e-8;  // in units of 1/R

void check_well(const SquareWell& well) { validate(PotentialSpec{well}); }

void check_momentum(double k) {
  if (!(k > 0.0) || !std::isfinite(k)) throw Error(Errc::precondition, "momentum k must be > 0");
}

// tan(delta)/k = num / den, both multiplied through by cos(gamma R) cos(k R).
struct Eq12Parts {
  double num;
  double den;
  double scale;
};

Eq12Parts eq12_parts(const SquareWell& well, double k) {
  const double R = well.range;
  const double gamma = std::sqrt(well.depth * well.depth + k * k);
  const double sg = std::sin(gamma * R), cg = std::cos(gamma * R);
  const double sk = std::sin(k * R), ck = std::cos(k * R);
  return {k * sg * ck - gamma * sk * cg, k * k * sg * sk + gamma * k * cg * ck, k * (k + gamma)};
}

}  // namespace

bool near_resonance(double beta_r, double eps) {
  const double half_pi = 0.5 * std::numbers::pi;
  const double n = std::floor(beta_r / std::numbers::pi);
  const double pole = n * std::numbers::pi + half_pi;
  return std::abs(beta_r - pole) < eps;
}

double scattering_length(const SquareWell& well) {
  check_well(well);
  const double beta = well.depth, R = well.range;
  if (beta == 0.0) return 0.0;
  const double x = beta * R;
  if (near_resonance(x)) {
    throw Error(Errc::resonance_pole,
                "beta R = " + std::to_string(x) + " sits on a zero-energy bound state");
  }
  if (x < 1e-4) {
    // R - tan(x)/beta expanded; the direct form cancels catastrophically here.
    const double x2 = x * x;
    return -R * x2 / 3.0 * (1.0 + 0.4 * x2);
  }
  return R - std::tan(x) / beta;
}

double exact_tan_delta_over_k(const SquareWell& well, double k) {
  check_well(well);
  check_momentum(k);
  if (k * well.range < kSmallMomentum) return -scattering_length(well);
  const auto p = eq12_parts(well, k);
  if (std::abs(p.den) < kPoleEpsilon * p.scale) {
    throw Error(Errc::isolated_pole, "tan(delta) is infinite at k = " + std::to_string(k));
  }
  return p.num / p.den;
}

double exact_k_cot_delta(const SquareWell& well, double k) {
  check_well(well);
  check_momentum(k);
  if (k * well.range < kSmallMomentum) {
    const double a = scattering_length(well);
    if (a == 0.0) throw Error(Errc::zero_energy_pole, "k cot(delta) diverges as k -> 0 when a = 0");
    return -1.0 / a;
  }
  const auto p = eq12_parts(well, k);
  if (std::abs(p.num) < kPoleEpsilon * p.scale) {
    throw Error(Errc::isolated_pole, "tan(delta) vanishes at k = " + std::to_string(k));
  }
  return p.den / p.num;
}

PhaseRecord exact_phase(const SquareWell& well, double k) {
  check_well(well);
  check_momentum(k);
  if (k * well.range < kSmallMomentum) {
    const double a = scattering_length(well);
    return make_phase_record(k, -a * k, 1.0);
  }
  const auto p = eq12_parts(well, k);
  return make_phase_record(k, k * p.num, p.den);
}

double interior_wavefunction(const SquareWell& well, double k, double delta, double r) {
  check_well(well);
  check_momentum(k);
  if (!(r >= 0.0 && r < well.range)) {
    throw Error(Errc::precondition, "interior wave function needs 0 <= r < R");
  }
  const double gamma = std::sqrt(well.depth * well.depth + k * k);
  const double cg = std::cos(gamma * well.range);
  if (std::abs(cg) < kPoleEpsilon) {
    throw Error(Errc::degenerate_normalization, "cos(gamma R) = 0");
  }
  return std::cos(k * well.range + delta) * std::sin(gamma * r) / (gamma * cg);
}

double interior_wavefunction_derivative(const SquareWell& well, double k, double delta,
                                        double r) {
  check_well(well);
  check_momentum(k);
  if (!(r >= 0.0 && r < well.range)) {
    throw Error(Errc::precondition, "interior wave function needs 0 <= r < R");
  }
  const double gamma = std::sqrt(well.depth * well.depth + k * k);
  const double cg = std::cos(gamma * well.range);
  if (std::abs(cg) < kPoleEpsilon) {
    throw Error(Errc::degenerate_normalization, "cos(gamma R) = 0");
  }
  return std::cos(k * well.range + delta) * std::cos(gamma * r) / cg;
}

SquareWellCoefficients taylor_coefficients(const SquareWell& well) {
  check_well(well);
  if (!(well.depth > 0.0)) throw Error(Errc::precondition, "taylor coefficients need beta > 0");
  const double R = well.range, beta2 = well.depth * well.depth;
  SquareWellCoefficients c;
  c.a = scattering_length(well);
  const double a = c.a;
  c.b_small = a / (2.0 * beta2) + R * R * R / 6.0 - a * a * R / 2.0;
  if (a != 0.0) {
    c.c_large = R / 2.0 - R * R * R / (6.0 * a * a) - 1.0 / (2.0 * a * beta2);
    c.r0_full = 2.0 * *c.c_large;
  }
  return c;
}

}  // namespace erange
