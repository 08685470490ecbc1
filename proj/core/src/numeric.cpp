#include "extremal/numeric.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>

#include "extremal/errors.hpp"

namespace extremal {

double integrate(const RealFn& f, double a, double b, double tol) {
  if (std::isnan(a) || std::isnan(b)) throw PreconditionError("integrate: NaN bound");
  if (a == b) return 0.0;
  if (a > b) return -integrate(f, b, a, tol);
  if (std::isinf(a)) throw PreconditionError("integrate: lower bound must be finite");
  try {
    if (std::isinf(b)) {
      boost::math::quadrature::exp_sinh<double> es;
      return es.integrate([&](double s) { return f(a + s); }, tol);
    }
    boost::math::quadrature::tanh_sinh<double> ts;
    return ts.integrate([&](double s) { return f(s); }, a, b, tol);
  } catch (const std::domain_error& e) {
    throw DivergentIntegral(std::string("integrate: ") + e.what());
  } catch (const boost::math::evaluation_error& e) {
    throw DivergentIntegral(std::string("integrate: ") + e.what());
  }
}

double left_inverse(const RealFn& f, double level, double lo, double hi) {
  if (f(lo) >= level) return lo;
  if (f(hi) < level) return hi;
  for (int i = 0; i < 2000; ++i) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (hi - lo <= 1e-15 * std::max(std::abs(lo), std::abs(hi))) break;
    if (f(mid) >= level)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

LinearFit fit_line(const double* xs, const double* ys, std::size_t n) {
  LinearFit fit;
  if (n == 0) return fit;
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  fit.slope = sxx > 0 ? sxy / sxx : 0.0;
  fit.intercept = my - fit.slope * mx;
  for (std::size_t i = 0; i < n; ++i)
    fit.max_residual =
        std::max(fit.max_residual, std::abs(ys[i] - fit.intercept - fit.slope * xs[i]));
  return fit;
}

}  // namespace extremal
