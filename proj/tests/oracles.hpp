#pragma once

// Reference routines used only by the tests. They are deliberately coded from
// the raw formulas (tan form, plain bisection, composite Simpson) and share no
// code with the library.

#include <cmath>
#include <functional>
#include <vector>

namespace oracle {

// a = R - tan(beta R)/beta
inline double scattering_length(double R, double beta) { return R - std::tan(beta * R) / beta; }

// tan(delta)/k in its raw tan form.
inline double tan_delta_over_k(double R, double beta, double k) {
  const double g = std::sqrt(beta * beta + k * k);
  return (k * std::tan(g * R) - g * std::tan(k * R)) /
         (k * k * std::tan(g * R) * std::tan(k * R) + g * k);
}

// d f/d s at s -> 0 from forward differences (f(s) - f(0))/s, Richardson
// extrapolated in s (error series in powers of s).
inline double richardson_slope(const std::function<double(double)>& f, double f0, double s0,
                               int levels = 6) {
  std::vector<std::vector<double>> t(levels, std::vector<double>(levels));
  double s = s0;
  for (int i = 0; i < levels; ++i, s *= 0.5) {
    t[i][0] = (f(s) - f0) / s;
    double factor = 1.0;
    for (int j = 1; j <= i; ++j) {
      factor *= 2.0;
      t[i][j] = (factor * t[i][j - 1] - t[i - 1][j - 1]) / (factor - 1.0);
    }
  }
  return t[levels - 1][levels - 1];
}

inline double bisect(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo);
  for (int i = 0; i < 300 && hi - lo > 1e-15 * std::abs(hi); ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

inline double simpson(const std::function<double(double)>& f, double lo, double hi, int n) {
  if (n % 2) ++n;
  const double h = (hi - lo) / n;
  double sum = f(lo) + f(hi);
  for (int i = 1; i < n; ++i) sum += f(lo + i * h) * (i % 2 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

// First Born approximation delta ~ -(1/k) int V(r) sin^2(kr) dr.
inline double born_phase(const std::function<double(double)>& V, double k, double r_max) {
  return -simpson([&](double r) { return V(r) * std::sin(k * r) * std::sin(k * r); }, 0.0, r_max,
                  20000) /
         k;
}

}  // namespace oracle
