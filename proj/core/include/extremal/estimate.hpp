#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "extremal/batch.hpp"
#include "extremal/cones.hpp"
#include "extremal/measure.hpp"
#include "extremal/numeric.hpp"

namespace extremal {

struct TailEstimate {
  double value = 0.0;
  double stderr_ = 0.0;
  std::size_t k = 0;
  std::size_t count = 0;
  Scaling scaling;
};

// floor(n^0.6).
std::size_t default_k(std::size_t n);
// Throws PreconditionError unless 10 <= k <= n/10.
void check_k(std::size_t n, std::size_t k);

// Maps a raw pair to its normalised position at level t.
using Normalization = std::function<Point(double x, double y, double t)>;
Normalization power_normalization(Scaling s);

// (1/k) #{ i : (x_i / t^p, y_i / t^q) in r }, t = n/k, binomial stderr
// sqrt(p(1-p) n) / k.
TailEstimate tail_measure_estimate(const SampleBatch& b, std::size_t k, Scaling s,
                                   const ConeRect& r);
TailEstimate tail_measure_estimate(const SampleBatch& b, std::size_t k,
                                   const Normalization& norm, const ConeRect& r);

// Bootstrap standard error of the same estimate from `resamples` resamples
// drawn with the counter generator under `seed`.
double bootstrap_stderr(const SampleBatch& b, std::size_t k, Scaling s, const ConeRect& r,
                        std::size_t resamples = 200, std::uint64_t seed = 0);

// c(a) = y * lim t P(min(aX, Y)/t > y) on the standardised batch; the limit
// equals nu((1/a, inf] x (1, inf]). a = inf is allowed (min(aX,Y) = Y, X > 0).
TailEstimate c_function_estimate(const SampleBatch& b, double a, double y, std::size_t k);

// Apply monotone maps to each coordinate.
SampleBatch transform(const SampleBatch& b, const RealFn& fx, const RealFn& fy);

// The joint check compares t^power f(t^p x, t^q y) with limit_g; the default
// (3, 1, 1) is the standard-scaling case on the upper strip.
struct DensityModel {
  std::function<double(double, double)> joint;
  double power = 3.0;
  Scaling scaling;
  RealFn marginal_x;
  RealFn marginal_y;
  std::function<double(double, double)> limit_g;
  RealFn limit_x;                                 // limit of t^2 f_X(tx)
  RealFn limit_y;                                 // limit of t^2 f_Y(ty)
};

struct DensityResidual {
  double joint = 0.0;
  double marginal_x = 0.0;
  double marginal_y = 0.0;
  double max() const noexcept;
};

// Residuals at the largest t of the grid, maximised over the points.
DensityResidual density_limit_check(const DensityModel& d, const std::vector<double>& t_grid,
                                    const std::vector<Point>& points);

// Density model for (R xi, R) with xi having density g on [0, inf):
// f(x,y) = y^{-3} g(x/y) for y > 1. The x-marginal is supplied by the caller
// because it depends on G.
DensityModel ex53_density_model(RealFn g, RealFn marginal_x, RealFn limit_x);
// Independent Pareto(1) pair in the conditional scaling (p, q) = (0, 1),
// power 2: t^2 f(x, ty) = x^{-2} y^{-2}. Under joint scaling t^3 f(tx, ty)
// vanishes like 1/t since independence puts the mass on the axes.
DensityModel independent_pareto_density_model();

}  // namespace extremal
