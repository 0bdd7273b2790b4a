#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "erange/potentials.hpp"

namespace erange::tools {

/// Exit statuses of the erange command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNumerical = 2;
inline constexpr int kExitOrdering = 3;

/// Parses "squarewell:R=1,beta=4.4934", "gaussian:R=1,V0=5", "exponential:..."
/// or "yukawa:...". Throws std::invalid_argument on malformed text; the result
/// is not yet validated.
PotentialSpec parse_potential(const std::string& text);

/// Runs one subcommand. `args` excludes the program name.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace erange::tools
