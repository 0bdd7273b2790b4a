#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "erange/expansions.hpp"
#include "erange/phase_record.hpp"
#include "erange/potentials.hpp"

namespace erange {

/// Closed k^2 interval. A window with lo <= 0 is read as (0, hi].
struct Window {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double kk) const noexcept { return kk >= lo && kk <= hi && kk > 0.0; }
};

inline constexpr Window kDefaultWindow{0.005, 0.5};
inline constexpr std::size_t kDefaultSamples = 100;

void validate(const Window& w);

/// n sample points in the window: hi*i/n for i = 1..n when lo <= 0, else an
/// inclusive uniform grid.
std::vector<double> kk_grid(const Window& w, std::size_t n);

/// Effective-range function value selected by a role.
double role_value(const PhaseRecord& rec, ValueRole role);

// -- scattering-length curve ------------------------------------------------

struct ScanPoint {
  double beta_r = 0.0;
  std::optional<double> a_over_r;  // empty at a pole
  bool pole = false;
};

inline constexpr double kScanPoleTolerance = 1e-6;

ScanPoint scan_point(double R, double beta_r);

/// a/R on the uniform grid beta R = i beta_max R / n, i = 1..n.
std::vector<ScanPoint> scattering_length_scan(double R, double beta_max, std::size_t n);

/// Nontrivial zeros of a(beta R) (roots of tan x = x) below beta_r_max.
std::vector<double> scattering_length_zeros(double beta_r_max);

/// beta with a(beta) = a_target, bracket given in units of beta R. Bisection
/// to 1e-12 in beta R then secant polish. Throws Error(bracket) when the bracket
/// straddles a pole or shows no sign change.
double solve_beta_for_target_a(double R, double a_target, Window bracket_beta_r);

// -- fitting ----------------------------------------------------------------

struct ErFitResult {
  ExpansionKind kind{};
  ErParams params;
  SeriesCoefficients line;  // raw least-squares intercept and slope
  double rms_residual = 0.0;
  Window window;
  std::size_t n_points = 0;
};

/// Ordinary least squares of the kind's effective-range function against
/// intercept + slope k^2 over the records inside the window, mapped back to (a, r0).
ErFitResult fit_effective_range(std::span<const PhaseRecord> records, ExpansionKind kind,
                                Window window);

// -- expansion vs exact -----------------------------------------------------

enum class ParamsPolicy { use_range_R, use_fitted };

struct DeviationSample {
  double kk = 0.0;
  double exact = 0.0;
  double approx = 0.0;
  bool flagged = false;  // exact function at a pole; excluded from statistics
};

struct ErrorReport {
  ExpansionKind kind{};
  ErParams params;
  double max_abs_dev = 0.0;
  double mean_abs_dev = 0.0;
  Window window;
  std::size_t n_flagged = 0;
  std::vector<DeviationSample> samples;  // ascending in k^2
};

std::vector<ErrorReport> compare_expansions(const SquareWell& well,
                                            std::span<const ExpansionKind> kinds,
                                            ParamsPolicy policy, Window window, std::size_t n);

}  // namespace erange
