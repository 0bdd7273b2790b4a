#pragma once

namespace erange {

struct PhaseFlags {
  bool pole_near_kcot = false;  // tan(delta) ~ 0, so k cot(delta) blows up
  bool pole_near_tan = false;   // cos(delta) ~ 0, so tan(delta)/k blows up

  bool any() const noexcept { return pole_near_kcot || pole_near_tan; }
};

/// Scattering output at one momentum. delta is the principal value in (-pi/2, pi/2].
struct PhaseRecord {
  double k = 0.0;
  double delta = 0.0;
  double tan_delta_over_k = 0.0;
  double k_cot_delta = 0.0;
  PhaseFlags flags;
};

/// Relative size below which sin or cos of delta is treated as a pole.
inline constexpr double kPhasePoleTolerance = 1e-12;

/// Builds a record from tan(delta) = numerator / denominator. Keeping the two
/// factors apart lets delta = pi/2 and delta = 0 be represented exactly.
PhaseRecord make_phase_record(double k, double numerator, double denominator);

}  // namespace erange
