#pragma once

#include <functional>

namespace erange {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // Kronrod-minus-Gauss estimate
};

/// Adaptive 15-point Gauss-Kronrod integration of f over [lo, hi] to an
/// absolute tolerance. The endpoints are never evaluated, so integrable
/// endpoint singularities are allowed. Throws Error(no_convergence) when the
/// error estimate stays above abs_tol.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                                    double abs_tol, unsigned max_depth = 20);

}  // namespace erange
