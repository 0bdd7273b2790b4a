#include "erange/phase_record.hpp"

#include <cmath>
#include <limits>

#include "erange/error.hpp"

namespace erange {

PhaseRecord make_phase_record(double k, double numerator, double denominator) {
  if (!(k > 0.0)) throw Error(Errc::precondition, "momentum k must be > 0");
  const double norm = std::hypot(numerator, denominator);
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw Error(Errc::precondition, "phase factors must be finite and not both zero");
  }
  // Sign-normalize so that delta = atan2(num, den) lands in (-pi/2, pi/2].
  if (denominator < 0.0 || (denominator == 0.0 && numerator < 0.0)) {
    numerator = -numerator;
    denominator = -denominator;
  }

  PhaseRecord rec;
  rec.k = k;
  rec.delta = std::atan2(numerator, denominator);
  rec.flags.pole_near_tan = std::abs(denominator) <= kPhasePoleTolerance * norm;
  rec.flags.pole_near_kcot = std::abs(numerator) <= kPhasePoleTolerance * norm;
  constexpr double inf = std::numeric_limits<double>::infinity();
  rec.tan_delta_over_k = denominator != 0.0 ? numerator / (denominator * k) : inf;
  rec.k_cot_delta = numerator != 0.0 ? k * denominator / numerator : inf;
  return rec;
}

}  // namespace erange
