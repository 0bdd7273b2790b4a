#pragma once

// Numerov integration of the S-wave radial equation
//   u''(r) + [k^2 - V(r)] u(r) = 0,  u(0) = 0,
// with phase extraction by logarithmic-derivative matching to sin(kr + delta).

#include <cstddef>
#include <optional>
#include <vector>

#include "erange/phase_record.hpp"
#include "erange/potentials.hpp"

namespace erange {

struct SolverConfig {
  std::optional<double> step;     // grid spacing h; default 1e-4 R
  std::optional<double> r_match;  // default: R for the square well, else tail search
  double tail_epsilon = 1e-12;    // |V(r_match)| < tail_epsilon * max(k^2, 1/R^2)
  double quadrature_tol = 1e-10;  // absolute, for integral_identity
  double initial_scale = 1.0;     // u(h) = initial_scale * h
};

/// Throws Error(configuration) on an inconsistent configuration.
void validate(const SolverConfig& cfg);

/// Matching radius before grid snapping.
double matching_radius(const PotentialSpec& spec, double k, const SolverConfig& cfg);

/// Grid solution up to (and including) the matching node.
struct RadialSolution {
  double h = 0.0;
  std::size_t match_index = 0;
  std::vector<double> u;  // u[i] = u(i h), arbitrary normalisation
  double u_match = 0.0;
  double du_match = 0.0;
  PhaseRecord record;

  double r_match() const noexcept { return h * static_cast<double>(match_index); }

  /// u at any r in [0, r_match] by local six-point interpolation of the grid.
  double value(double r) const;

  /// Factor C with u(r) = C sin(kr + delta)/k beyond r_match.
  double asymptotic_amplitude() const;
};

RadialSolution integrate_radial(const PotentialSpec& spec, double k, const SolverConfig& cfg = {});

/// Phase shift and both effective-range functions at momentum k.
PhaseRecord solve_phase(const PotentialSpec& spec, double k, const SolverConfig& cfg = {});

/// -int_0^inf u(r) v(r) V(r) dr with u -> sin(kr + delta)/k and
/// v = sin(kr)/(k cos delta); equals tan(delta)/k. The square well uses the
/// closed-form interior u, other wells the normalised Numerov solution.
/// Throws Error(degenerate_normalization) when |cos delta| < 1e-8.
double integral_identity(const PotentialSpec& spec, double k, const SolverConfig& cfg = {});

}  // namespace erange
