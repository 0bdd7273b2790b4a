#pragma once

// Closed-form S-wave results for the attractive square well
// V(r) = -beta^2 (r < R), 0 (r >= R).

#include <optional>

#include "erange/phase_record.hpp"
#include "erange/potentials.hpp"

namespace erange {

/// Guard for vanishing denominators, measured in each denominator's natural scale.
inline constexpr double kPoleEpsilon = 1e-12;

/// True when beta R lies within eps of an odd multiple of pi/2.
bool near_resonance(double beta_r, double eps = kPoleEpsilon);

/// a = R - tan(beta R) / beta, with the analytic limit 0 at beta = 0.
/// Throws Error(resonance_pole) at a zero-energy bound state.
double scattering_length(const SquareWell& well);

/// tan(delta)/k from the matched interior/exterior solutions. Below k = 1e-8/R
/// the limit -a is returned. Throws Error(isolated_pole) where tan(delta) is infinite.
double exact_tan_delta_over_k(const SquareWell& well, double k);

/// k cot(delta); throws Error(isolated_pole) where tan(delta) = 0.
double exact_k_cot_delta(const SquareWell& well, double k);

/// Non-throwing variant: both effective-range functions with pole flags.
PhaseRecord exact_phase(const SquareWell& well, double k);

/// u(r) = cos(kR + delta) sin(gamma r) / (gamma cos(gamma R)) for 0 <= r < R,
/// normalised so that u(r) = sin(kr + delta)/k outside the well.
double interior_wavefunction(const SquareWell& well, double k, double delta, double r);

/// du/dr of interior_wavefunction.
double interior_wavefunction_derivative(const SquareWell& well, double k, double delta,
                                        double r);

/// Coefficients of k^2 in both effective-range functions.
struct SquareWellCoefficients {
  double a = 0.0;                  // scattering length
  double b_small = 0.0;            // tan(delta)/k = -a + b_small k^2 + ...
  std::optional<double> c_large;   // k cot(delta) = -1/a + c_large k^2 + ...; empty when a = 0
  std::optional<double> r0_full;   // 2 c_large
};

SquareWellCoefficients taylor_coefficients(const SquareWell& well);

}  // namespace erange
