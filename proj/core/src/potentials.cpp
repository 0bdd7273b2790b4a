#include "erange/potentials.hpp"

#include <cmath>
#include <sstream>

#include "erange/error.hpp"

namespace erange {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void require_positive_length(double length, const char* what) {
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw Error(Errc::precondition, std::string(what) + " must be positive and finite");
  }
}

void require_strength(double s, const char* what) {
  if (!(s >= 0.0) || !std::isfinite(s)) {
    throw Error(Errc::precondition, std::string(what) + " must be finite and >= 0");
  }
}

}  // namespace

void validate(const PotentialSpec& spec) {
  std::visit(overloaded{
                 [](const SquareWell& w) {
                   require_positive_length(w.range, "square well range R");
                   require_strength(w.depth, "square well depth beta");
                 },
                 [](const GaussianWell& w) {
                   require_positive_length(w.width, "gaussian width R");
                   require_strength(w.strength, "gaussian strength V0");
                 },
                 [](const ExponentialWell& w) {
                   require_positive_length(w.scale, "exponential scale R");
                   require_strength(w.strength, "exponential strength V0");
                 },
                 [](const YukawaWell& w) {
                   require_positive_length(w.scale, "yukawa scale R");
                   require_strength(w.strength, "yukawa strength V0");
                 },
             },
             spec);
}

double evaluate_potential(const PotentialSpec& spec, double r) {
  if (!(r >= 0.0)) throw Error(Errc::precondition, "radius must be >= 0");
  return std::visit(overloaded{
                        [r](const SquareWell& w) {
                          return r < w.range ? -w.depth * w.depth : 0.0;
                        },
                        [r](const GaussianWell& w) {
                          const double x = r / w.width;
                          return -w.strength * std::exp(-x * x);
                        },
                        [r](const ExponentialWell& w) {
                          return -w.strength * std::exp(-r / w.scale);
                        },
                        [r](const YukawaWell& w) {
                          if (r == 0.0) {
                            throw Error(Errc::singular_origin,
                                        "yukawa potential diverges at r = 0");
                          }
                          return -w.strength * std::exp(-r / w.scale) / r;
                        },
                    },
                    spec);
}

double evaluate_potential_left(const PotentialSpec& spec, double r) {
  if (const auto* w = std::get_if<SquareWell>(&spec)) {
    if (!(r >= 0.0)) throw Error(Errc::precondition, "radius must be >= 0");
    return r <= w->range ? -w->depth * w->depth : 0.0;
  }
  return evaluate_potential(spec, r);
}

double range_of(const PotentialSpec& spec) {
  return std::visit(overloaded{
                        [](const SquareWell& w) { return w.range; },
                        [](const GaussianWell& w) { return w.width; },
                        [](const ExponentialWell& w) { return w.scale; },
                        [](const YukawaWell& w) { return w.scale; },
                    },
                    spec);
}

double origin_r_times_v(const PotentialSpec& spec) {
  if (const auto* w = std::get_if<YukawaWell>(&spec)) return -w->strength;
  return 0.0;
}

bool has_compact_support(const PotentialSpec& spec) {
  return std::holds_alternative<SquareWell>(spec);
}

std::string describe(const PotentialSpec& spec) {
  std::ostringstream os;
  os.precision(15);
  std::visit(overloaded{
                 [&](const SquareWell& w) { os << "squarewell:R=" << w.range << ",beta=" << w.depth; },
                 [&](const GaussianWell& w) { os << "gaussian:R=" << w.width << ",V0=" << w.strength; },
                 [&](const ExponentialWell& w) {
                   os << "exponential:R=" << w.scale << ",V0=" << w.strength;
                 },
                 [&](const YukawaWell& w) { os << "yukawa:R=" << w.scale << ",V0=" << w.strength; },
             },
             spec);
  return os.str();
}

}  // namespace erange
