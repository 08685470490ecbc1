#include "extremal/estimate.hpp"

#include <algorithm>
#include <cmath>

#include "extremal/errors.hpp"
#include "extremal/rng.hpp"

namespace extremal {

std::size_t default_k(std::size_t n) {
  return static_cast<std::size_t>(std::floor(std::pow(static_cast<double>(n), 0.6)));
}

void check_k(std::size_t n, std::size_t k) {
  if (k < 10 || k > n / 10)
    throw PreconditionError("k = " + std::to_string(k) + " outside [10, n/10] for n = " +
                            std::to_string(n));
}

Normalization power_normalization(Scaling s) {
  return [s](double x, double y, double t) {
    return Point{x / std::pow(t, s.p), y / std::pow(t, s.q)};
  };
}

namespace {

TailEstimate finish(std::size_t count, std::size_t n, std::size_t k, Scaling s) {
  TailEstimate e;
  e.k = k;
  e.count = count;
  e.scaling = s;
  e.value = static_cast<double>(count) / static_cast<double>(k);
  double p = static_cast<double>(count) / static_cast<double>(n);
  e.stderr_ = std::sqrt(p * (1.0 - p) * static_cast<double>(n)) / static_cast<double>(k);
  return e;
}

std::size_t count_scaled(const double* xs, const double* ys, const std::size_t* idx,
                         std::size_t n, double tp, double tq, const ConeRect& r) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = idx ? idx[i] : i;
    if (r.contains({xs[j] / tp, ys[j] / tq})) ++count;
  }
  return count;
}

}  // namespace

TailEstimate tail_measure_estimate(const SampleBatch& b, std::size_t k, Scaling s,
                                   const ConeRect& r) {
  const std::size_t n = b.n();
  check_k(n, k);
  const double t = static_cast<double>(n) / static_cast<double>(k);
  std::size_t count =
      count_scaled(b.xs.data(), b.ys.data(), nullptr, n, std::pow(t, s.p), std::pow(t, s.q), r);
  return finish(count, n, k, s);
}

TailEstimate tail_measure_estimate(const SampleBatch& b, std::size_t k,
                                   const Normalization& norm, const ConeRect& r) {
  const std::size_t n = b.n();
  check_k(n, k);
  const double t = static_cast<double>(n) / static_cast<double>(k);
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (r.contains(norm(b.xs[i], b.ys[i], t))) ++count;
  return finish(count, n, k, Scaling{});
}

double bootstrap_stderr(const SampleBatch& b, std::size_t k, Scaling s, const ConeRect& r,
                        std::size_t resamples, std::uint64_t seed) {
  const std::size_t n = b.n();
  check_k(n, k);
  if (resamples < 2) throw PreconditionError("bootstrap: need at least 2 resamples");
  const double t = static_cast<double>(n) / static_cast<double>(k);
  const double tp = std::pow(t, s.p), tq = std::pow(t, s.q);
  const CounterRng rng(seed, stream::kBootstrap);
  std::vector<std::size_t> idx(n);
  double sum = 0.0, sum2 = 0.0;
  for (std::size_t rep = 0; rep < resamples; ++rep) {
    for (std::size_t i = 0; i < n; ++i) idx[i] = rng.bits(rep * n + i) % n;
    double v = static_cast<double>(count_scaled(b.xs.data(), b.ys.data(), idx.data(), n, tp, tq, r)) /
               static_cast<double>(k);
    sum += v;
    sum2 += v * v;
  }
  double m = sum / resamples;
  return std::sqrt(std::max(0.0, (sum2 - resamples * m * m) / (resamples - 1)));
}

TailEstimate c_function_estimate(const SampleBatch& b, double a, double y, std::size_t k) {
  if (!(a > 0.0)) throw PreconditionError("c_function_estimate: need a > 0");
  if (!(y > 0.0) || std::isinf(y)) throw PreconditionError("c_function_estimate: need 0 < y < inf");
  const std::size_t n = b.n();
  check_k(n, k);
  const double t = static_cast<double>(n) / static_cast<double>(k);
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double m = std::isinf(a) ? b.ys[i] : std::min(a * b.xs[i], b.ys[i]);
    if (m / t > y) ++count;
  }
  TailEstimate e = finish(count, n, k, Scaling{});
  e.value *= y;
  e.stderr_ *= y;
  return e;
}

SampleBatch transform(const SampleBatch& b, const RealFn& fx, const RealFn& fy) {
  SampleBatch out;
  out.model = b.model;
  out.seed = b.seed;
  out.xs.resize(b.n());
  out.ys.resize(b.n());
  for (std::size_t i = 0; i < b.n(); ++i) {
    out.xs[i] = fx ? fx(b.xs[i]) : b.xs[i];
    out.ys[i] = fy ? fy(b.ys[i]) : b.ys[i];
  }
  return out;
}

double DensityResidual::max() const noexcept { return std::max({joint, marginal_x, marginal_y}); }

DensityResidual density_limit_check(const DensityModel& d, const std::vector<double>& t_grid,
                                    const std::vector<Point>& points) {
  if (t_grid.empty()) throw PreconditionError("density_limit_check: empty t grid");
  const double t = *std::max_element(t_grid.begin(), t_grid.end());
  const double tp = std::pow(t, d.scaling.p), tq = std::pow(t, d.scaling.q);
  const double tpow = std::pow(t, d.power);
  DensityResidual res;
  for (const Point& p : points) {
    res.joint = std::max(res.joint, std::abs(tpow * d.joint(tp * p.x, tq * p.y) - d.limit_g(p.x, p.y)));
    if (d.marginal_x && d.limit_x)
      res.marginal_x = std::max(res.marginal_x, std::abs(t * t * d.marginal_x(t * p.x) - d.limit_x(p.x)));
    if (d.marginal_y && d.limit_y)
      res.marginal_y = std::max(res.marginal_y, std::abs(t * t * d.marginal_y(t * p.y) - d.limit_y(p.y)));
  }
  return res;
}

DensityModel ex53_density_model(RealFn g, RealFn marginal_x, RealFn limit_x) {
  DensityModel d;
  d.joint = [g](double x, double y) { return (y > 1.0 && x >= 0.0) ? g(x / y) / (y * y * y) : 0.0; };
  d.limit_g = [g](double x, double y) { return g(x / y) / (y * y * y); };
  d.marginal_x = std::move(marginal_x);
  d.limit_x = std::move(limit_x);
  d.marginal_y = [](double y) { return y >= 1.0 ? 1.0 / (y * y) : 0.0; };
  d.limit_y = [](double y) { return 1.0 / (y * y); };
  return d;
}

DensityModel independent_pareto_density_model() {
  DensityModel d;
  d.power = 2.0;
  d.scaling = {0.0, 1.0};
  d.joint = [](double x, double y) { return (x >= 1.0 && y >= 1.0) ? 1.0 / (x * x * y * y) : 0.0; };
  d.limit_g = [](double x, double y) { return x >= 1.0 ? 1.0 / (x * x * y * y) : 0.0; };
  d.marginal_x = [](double x) { return x >= 1.0 ? 1.0 / (x * x) : 0.0; };
  d.limit_x = [](double x) { return 1.0 / (x * x); };
  d.marginal_y = d.marginal_x;
  d.limit_y = d.limit_x;
  return d;
}

}  // namespace extremal
