#include "erange/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "erange/error.hpp"

namespace erange {

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                                    double abs_tol, unsigned max_depth) {
  using Rule = boost::math::quadrature::gauss_kronrod<double, 15>;
  if (!(abs_tol > 0.0)) throw Error(Errc::precondition, "quadrature tolerance must be > 0");
  if (lo == hi) return {};

  // Boost terminates on error <= tol * L1; derive tol from a one-panel L1 estimate.
  double l1 = 0.0;
  double err = 0.0;
  Rule::integrate(f, lo, hi, 0, 0.0, &err, &l1);
  const double rel_tol =
      std::max(abs_tol / std::max(l1, std::numeric_limits<double>::min()),
               4.0 * std::numeric_limits<double>::epsilon());

  QuadratureResult res;
  res.value = Rule::integrate(f, lo, hi, max_depth, rel_tol, &res.error, &l1);
  if (!std::isfinite(res.value)) throw Error(Errc::no_convergence, "non-finite integrand");
  // A relative floor at machine precision can never be beaten; accept it.
  const double floor = 16.0 * std::numeric_limits<double>::epsilon() * l1;
  if (res.error > std::max(abs_tol, floor)) {
    std::ostringstream os;
    os << "quadrature error estimate " << res.error << " exceeds tolerance " << abs_tol << " on ["
       << lo << ", " << hi << "]";
    throw Error(Errc::no_convergence, os.str());
  }
  return res;
}

}  // namespace erange
