#pragma once

// Two-parameter effective-range expansions, each a polynomial in k^2
// truncated after the k^2 term.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

namespace erange {

enum class ExpansionKind {
  TextbookLargeA,     // er1:  k cot d = -1/a + r0 k^2 / 2
  KetterleParam,      // er2:  -d/k   = a - [a^3/3 - a^2 r0/2] k^2
  LowestSmall,        // er18: tan d/k = -a + R^3 k^2 / 6
  LowestLarge,        // er19: k cot d = -1/a + R k^2 / 2
  ReciprocalSmallA,   // er22: tan d/k = -a + r0~^3 k^2 / 6
  ImprovedSmallA,     // er23: tan d/k = -a + [r0~^3/6 - a^2 r0~/2] k^2
  ImprovedLargeA,     // er24: k cot d = -1/a + [r0/2 - r0^3/(6a^2) - 2 r0^2/(pi^2 a)] k^2
  InverseOfTextbook,  // inv4: tan d/k = -a - a^2 r0 k^2 / 2
};

inline constexpr ExpansionKind kAllExpansionKinds[] = {
    ExpansionKind::TextbookLargeA,   ExpansionKind::KetterleParam,
    ExpansionKind::LowestSmall,      ExpansionKind::LowestLarge,
    ExpansionKind::ReciprocalSmallA, ExpansionKind::ImprovedSmallA,
    ExpansionKind::ImprovedLargeA,   ExpansionKind::InverseOfTextbook,
};

/// Which effective-range function a kind approximates.
enum class ValueRole { tan_delta_over_k, k_cot_delta, minus_delta_over_k };

ValueRole value_role(ExpansionKind kind) noexcept;

/// Stable CLI token ("er1", "er22", "inv4", ...).
std::string_view token(ExpansionKind kind) noexcept;
std::optional<ExpansionKind> parse_kind(std::string_view token) noexcept;

/// Scattering length plus effective range (r0 for large-a kinds, r0~ for
/// small-a kinds, the well range R for the lowest-order kinds).
struct ErParams {
  double a = 0.0;
  double r0 = 0.0;
};

/// f(k^2) = intercept + slope k^2.
struct SeriesCoefficients {
  double intercept = 0.0;
  double slope = 0.0;
};

/// Throws Error(precondition) when r0 must be positive for this kind and is not,
/// and Error(zero_energy_pole) for a k cot(delta) kind with a = 0.
void validate(ExpansionKind kind, const ErParams& p);

SeriesCoefficients expansion_coefficients(ExpansionKind kind, const ErParams& p);

double eval_expansion(ExpansionKind kind, const ErParams& p, double k);

/// Truncated reciprocal of -a + b k^2: (-1/a, -b/a^2). Throws Error(zero_energy_pole) at a = 0.
SeriesCoefficients reciprocal_coefficients(double a, double b);

/// Inverse of expansion_coefficients: recovers (a, r0) from a fitted line.
/// For the improved kinds the slope relation is a cubic in r0 and the smallest
/// positive real root is taken. Throws Error(fit_inversion) when no admissible
/// root exists.
ErParams params_from_coefficients(ExpansionKind kind, SeriesCoefficients c);

struct CubicRoots {
  std::array<double, 3> values{};
  std::size_t count = 0;

  std::span<const double> roots() const noexcept { return {values.data(), count}; }
};

/// Real roots of c3 x^3 + c2 x^2 + c1 x + c0, ascending, Newton-polished.
/// Falls back to the quadratic or linear case when leading coefficients are zero.
CubicRoots real_cubic_roots(double c3, double c2, double c1, double c0);

}  // namespace erange
