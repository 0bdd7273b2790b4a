#include "erange/expansions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "erange/error.hpp"

namespace erange {

namespace {

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

struct KindInfo {
  ExpansionKind kind;
  std::string_view token;
  ValueRole role;
  bool any_sign_r0;
};

constexpr KindInfo kKinds[] = {
    {ExpansionKind::TextbookLargeA, "er1", ValueRole::k_cot_delta, true},
    {ExpansionKind::KetterleParam, "er2", ValueRole::minus_delta_over_k, true},
    {ExpansionKind::LowestSmall, "er18", ValueRole::tan_delta_over_k, false},
    {ExpansionKind::LowestLarge, "er19", ValueRole::k_cot_delta, false},
    {ExpansionKind::ReciprocalSmallA, "er22", ValueRole::tan_delta_over_k, false},
    {ExpansionKind::ImprovedSmallA, "er23", ValueRole::tan_delta_over_k, false},
    {ExpansionKind::ImprovedLargeA, "er24", ValueRole::k_cot_delta, false},
    {ExpansionKind::InverseOfTextbook, "inv4", ValueRole::tan_delta_over_k, true},
};

const KindInfo& info(ExpansionKind kind) noexcept {
  for (const auto& k : kKinds) {
    if (k.kind == kind) return k;
  }
  return kKinds[0];
}

double polish(double c3, double c2, double c1, double c0, double x) {
  for (int it = 0; it < 4; ++it) {
    const double p = ((c3 * x + c2) * x + c1) * x + c0;
    const double dp = (3.0 * c3 * x + 2.0 * c2) * x + c1;
    if (dp == 0.0) break;
    const double step = p / dp;
    if (!std::isfinite(step)) break;
    x -= step;
  }
  return x;
}

double smallest_positive(const CubicRoots& r) {
  for (double x : r.roots()) {
    if (x > 0.0) return x;
  }
  return std::nan("");
}

}  // namespace

ValueRole value_role(ExpansionKind kind) noexcept { return info(kind).role; }

std::string_view token(ExpansionKind kind) noexcept { return info(kind).token; }

std::optional<ExpansionKind> parse_kind(std::string_view tok) noexcept {
  for (const auto& k : kKinds) {
    if (k.token == tok) return k.kind;
  }
  return std::nullopt;
}

void validate(ExpansionKind kind, const ErParams& p) {
  if (!std::isfinite(p.a) || !std::isfinite(p.r0)) {
    throw Error(Errc::precondition, "expansion parameters must be finite");
  }
  if (!info(kind).any_sign_r0 && !(p.r0 > 0.0)) {
    throw Error(Errc::precondition,
                "effective range must be > 0 for " + std::string(token(kind)));
  }
  if (value_role(kind) == ValueRole::k_cot_delta && p.a == 0.0) {
    throw Error(Errc::zero_energy_pole,
                "-1/a diverges at a = 0 for " + std::string(token(kind)));
  }
}

SeriesCoefficients expansion_coefficients(ExpansionKind kind, const ErParams& p) {
  validate(kind, p);
  const double a = p.a, r = p.r0;
  switch (kind) {
    case ExpansionKind::TextbookLargeA:
    case ExpansionKind::LowestLarge:
      return {-1.0 / a, 0.5 * r};
    case ExpansionKind::ReciprocalSmallA:
    case ExpansionKind::LowestSmall:
      return {-a, r * r * r / 6.0};
    case ExpansionKind::ImprovedSmallA:
      return {-a, r * r * r / 6.0 - a * a * r / 2.0};
    case ExpansionKind::ImprovedLargeA:
      return {-1.0 / a, r / 2.0 - r * r * r / (6.0 * a * a) - 2.0 * r * r / (kPi2 * a)};
    case ExpansionKind::InverseOfTextbook:
      return {-a, -0.5 * a * a * r};
    case ExpansionKind::KetterleParam:
      return {a, -(a * a * a / 3.0 - a * a * r / 2.0)};
  }
  return {};
}

double eval_expansion(ExpansionKind kind, const ErParams& p, double k) {
  if (!(k >= 0.0) || !std::isfinite(k)) throw Error(Errc::precondition, "momentum k must be >= 0");
  const auto c = expansion_coefficients(kind, p);
  return c.intercept + c.slope * (k * k);
}

SeriesCoefficients reciprocal_coefficients(double a, double b) {
  if (a == 0.0) {
    throw Error(Errc::zero_energy_pole, "reciprocal series has a pole at k^2 = 0 when a = 0");
  }
  return {-1.0 / a, -b / (a * a)};
}

CubicRoots real_cubic_roots(double c3, double c2, double c1, double c0) {
  CubicRoots out;
  auto push = [&](double x) { out.values[out.count++] = x; };

  if (c3 == 0.0) {
    if (c2 == 0.0) {
      if (c1 != 0.0) push(-c0 / c1);
      return out;
    }
    const double disc = c1 * c1 - 4.0 * c2 * c0;
    if (disc < 0.0) return out;
    // Numerically stable pair.
    const double q = -0.5 * (c1 + std::copysign(std::sqrt(disc), c1));
    if (q != 0.0) {
      push(q / c2);
      push(c0 / q);
    } else {
      push(0.0);
    }
  } else {
    const double A = c2 / c3, B = c1 / c3, C = c0 / c3;
    const double p = B - A * A / 3.0;
    const double q = 2.0 * A * A * A / 27.0 - A * B / 3.0 + C;
    const double disc = 0.25 * q * q + p * p * p / 27.0;
    const double shift = -A / 3.0;
    if (disc > 0.0) {
      const double sq = std::sqrt(disc);
      push(std::cbrt(-0.5 * q + sq) + std::cbrt(-0.5 * q - sq) + shift);
    } else if (p == 0.0) {
      push(shift);
    } else {
      const double m = 2.0 * std::sqrt(-p / 3.0);
      const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
      const double phi = std::acos(arg) / 3.0;
      for (int j = 0; j < 3; ++j) {
        push(m * std::cos(phi - 2.0 * std::numbers::pi * j / 3.0) + shift);
      }
    }
  }
  for (std::size_t i = 0; i < out.count; ++i) {
    out.values[i] = polish(c3, c2, c1, c0, out.values[i]);
  }
  std::sort(out.values.begin(), out.values.begin() + static_cast<std::ptrdiff_t>(out.count));
  return out;
}

ErParams params_from_coefficients(ExpansionKind kind, SeriesCoefficients c) {
  auto fail = [&](const std::string& why) {
    throw Error(Errc::fit_inversion, std::string(token(kind)) + ": " + why +
                                         " (raw slope " + std::to_string(c.slope) + ")");
  };
  auto a_from_reciprocal_intercept = [&] {
    if (c.intercept == 0.0) fail("zero intercept means an infinite scattering length");
    return -1.0 / c.intercept;
  };

  ErParams p;
  switch (kind) {
    case ExpansionKind::TextbookLargeA:
      p.a = a_from_reciprocal_intercept();
      p.r0 = 2.0 * c.slope;
      break;
    case ExpansionKind::LowestLarge:
      p.a = a_from_reciprocal_intercept();
      p.r0 = 2.0 * c.slope;
      if (!(p.r0 > 0.0)) fail("slope must be positive");
      break;
    case ExpansionKind::ReciprocalSmallA:
    case ExpansionKind::LowestSmall:
      p.a = -c.intercept;
      if (!(c.slope > 0.0)) fail("slope must be positive for r0~^3/6");
      p.r0 = std::cbrt(6.0 * c.slope);
      break;
    case ExpansionKind::ImprovedSmallA: {
      p.a = -c.intercept;
      // r^3/6 - a^2 r/2 - slope = 0
      p.r0 = smallest_positive(real_cubic_roots(1.0 / 6.0, 0.0, -0.5 * p.a * p.a, -c.slope));
      if (!(p.r0 > 0.0)) fail("no positive real root of the effective-range cubic");
      break;
    }
    case ExpansionKind::ImprovedLargeA: {
      p.a = a_from_reciprocal_intercept();
      const double a = p.a;
      // -r^3/(6a^2) - 2r^2/(pi^2 a) + r/2 - slope = 0
      p.r0 = smallest_positive(
          real_cubic_roots(-1.0 / (6.0 * a * a), -2.0 / (kPi2 * a), 0.5, -c.slope));
      if (!(p.r0 > 0.0)) fail("no positive real root of the effective-range cubic");
      break;
    }
    case ExpansionKind::InverseOfTextbook:
      p.a = -c.intercept;
      if (p.a == 0.0) fail("a = 0 leaves r0 undetermined");
      p.r0 = -2.0 * c.slope / (p.a * p.a);
      break;
    case ExpansionKind::KetterleParam:
      p.a = c.intercept;
      if (p.a == 0.0) fail("a = 0 leaves r0 undetermined");
      p.r0 = 2.0 * (c.slope + p.a * p.a * p.a / 3.0) / (p.a * p.a);
      break;
  }
  return p;
}

}  // namespace erange
