#pragma once

#include <functional>
#include <limits>

namespace extremal {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

using RealFn = std::function<double(double)>;

// Integral of f over [a, b]. Finite intervals go through tanh-sinh, which
// tolerates integrable endpoint singularities (w -> 1 for the densities on
// the upper strip). Semi-infinite intervals go through exp-sinh.
double integrate(const RealFn& f, double a, double b, double tol = 1e-12);

// Smallest y in [lo, hi] with f(y) >= level for nondecreasing f, found by
// bisection to relative width 1e-15. Returns hi when the level is never hit.
double left_inverse(const RealFn& f, double level, double lo, double hi);

// Ordinary least squares slope and intercept of ys on xs plus the max residual.
struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;
};
LinearFit fit_line(const double* xs, const double* ys, std::size_t n);

}  // namespace extremal
