#include "erange/error.hpp"

namespace erange {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::precondition: return "precondition";
    case Errc::singular_origin: return "singular origin";
    case Errc::resonance_pole: return "resonance pole";
    case Errc::isolated_pole: return "isolated pole";
    case Errc::degenerate_normalization: return "degenerate normalization";
    case Errc::zero_energy_pole: return "zero-energy pole";
    case Errc::bracket: return "bracketing";
    case Errc::no_convergence: return "no convergence";
    case Errc::configuration: return "configuration";
    case Errc::fit_inversion: return "fit inversion";
  }
  return "unknown";
}

}  // namespace erange
