#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace erange {

/// Failure categories reported by the numerical routines.
enum class Errc {
  precondition,              // argument outside the documented domain
  singular_origin,           // potential evaluated at r = 0 where it diverges
  resonance_pole,            // beta R at an odd multiple of pi/2, a diverges
  isolated_pole,             // closed-form tan(delta)/k denominator vanishes at this momentum
  degenerate_normalization,  // cos(gamma R) = 0 in the interior wave function
  zero_energy_pole,          // k cot(delta) form evaluated with a = 0
  bracket,                   // root bracket without sign change or with a pole
  no_convergence,            // iteration or quadrature did not converge
  configuration,             // inconsistent solver configuration
  fit_inversion,             // fitted slope has no admissible effective range
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace erange
