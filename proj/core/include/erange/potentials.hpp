#pragma once

// Short-range S-wave potentials in units hbar = 2m = 1: energies are k^2 and
// potentials carry inverse length squared. Every well is attractive,
// V(r) = -strength * profile(r / R).

#include <string>
#include <variant>

namespace erange {

/// V(r) = -depth^2 for r < range, 0 for r >= range.
struct SquareWell {
  double range = 1.0;  // R
  double depth = 0.0;  // beta
};

/// V(r) = -strength * exp(-(r/width)^2)
struct GaussianWell {
  double strength = 0.0;
  double width = 1.0;
};

/// V(r) = -strength * exp(-r/scale)
struct ExponentialWell {
  double strength = 0.0;
  double scale = 1.0;
};

/// V(r) = -strength * exp(-r/scale) / r, strength in inverse length.
struct YukawaWell {
  double strength = 0.0;
  double scale = 1.0;
};

using PotentialSpec = std::variant<SquareWell, GaussianWell, ExponentialWell, YukawaWell>;

/// Throws Error(precondition) unless the range is positive and finite and the
/// strength is finite and non-negative.
void validate(const PotentialSpec& spec);

/// V(r) for r >= 0. Yukawa at r = 0 throws Error(singular_origin).
double evaluate_potential(const PotentialSpec& spec, double r);

/// Left limit V(r^-). Differs from evaluate_potential only at the square-well edge.
double evaluate_potential_left(const PotentialSpec& spec, double r);

/// Characteristic length R of the well.
double range_of(const PotentialSpec& spec);

/// lim_{r->0} r V(r): zero for regular wells, -strength for Yukawa.
double origin_r_times_v(const PotentialSpec& spec);

/// True for a square well, whose support ends exactly at R.
bool has_compact_support(const PotentialSpec& spec);

/// Canonical text form, e.g. "squarewell:R=1,beta=4.4934".
std::string describe(const PotentialSpec& spec);

}  // namespace erange
