#include "extremal/extend.hpp"

#include <algorithm>
#include <cmath>

#include "extremal/errors.hpp"
#include "extremal/estimate.hpp"
#include "extremal/samplers.hpp"

namespace extremal {

std::string to_string(RatioClass c) {
  switch (c) {
    case RatioClass::Zero: return "zero";
    case RatioClass::Finite: return "finite";
    case RatioClass::Infinite: return "infinite";
  }
  return "?";
}

ExtensionClass extension_condition(const NormFns& chi, const NormFns& alpha,
                                   const std::vector<double>& t_grid) {
  if (!chi.scale || !alpha.scale) throw PreconditionError("extension_condition: missing scale");
  if (t_grid.size() < 3 || t_grid.back() / t_grid.front() < 1e3)
    throw PreconditionError("extension_condition: t grid must span at least 3 decades");
  const double t_max = t_grid.back();
  std::vector<double> u, v, last_decade;
  for (double t : t_grid) {
    if (t <= std::exp(1.0)) continue;
    double r = chi.scale(t) / alpha.scale(t);
    if (!(r > 0.0) || !std::isfinite(r))
      throw ClassificationFailure("extension_condition: chi/alpha not positive and finite at t = " +
                                  std::to_string(t));
    if (t >= t_max / 1e3) {
      u.push_back(std::log(std::log(t)));
      v.push_back(std::log(r));
    }
    if (t >= t_max / 10.0) last_decade.push_back(r);
  }
  if (u.size() < 3) throw PreconditionError("extension_condition: too few grid points above t = e");
  ExtensionClass out;
  out.slope = fit_line(u.data(), v.data(), u.size()).slope;
  // A steep fit only counts as a trend when the log ratio moves one way;
  // otherwise an oscillation with a large swing would pass for one.
  if (std::abs(out.slope) > 0.5) {
    const double dir = out.slope > 0.0 ? 1.0 : -1.0;
    for (std::size_t i = 1; i < v.size(); ++i)
      if (dir * (v[i] - v[i - 1]) < -1e-9 * (1.0 + std::abs(v[i])))
        throw ClassificationFailure("extension_condition: chi/alpha is not monotone over the last decades");
  }
  if (out.slope > 0.5) {
    out.kind = RatioClass::Infinite;
    out.limit = kInf;
    return out;
  }
  if (out.slope < -0.5) {
    out.kind = RatioClass::Zero;
    out.limit = 0.0;
    return out;
  }
  double lo = *std::min_element(last_decade.begin(), last_decade.end());
  double hi = *std::max_element(last_decade.begin(), last_decade.end());
  if (hi - lo > 0.01 * hi)
    throw ClassificationFailure("extension_condition: chi/alpha does not settle (last decade range [" +
                                std::to_string(lo) + ", " + std::to_string(hi) + "])");
  out.kind = RatioClass::Finite;
  out.limit = last_decade.back();
  return out;
}

ExtensionClass extension_condition(const NormFns& chi, const NormFns& alpha) {
  return extension_condition(chi, alpha, geometric_grid(10.0, 1e12, 4));
}

Extension mevt_extension(const AngularMeasure& s, std::uint64_t seed) {
  if (!s.finite_total())
    throw DivergentIntegral("mevt_extension: " + s.label() +
                            " has infinite mass on [0,1), so no full-cone limit shares it");
  return {make_from_angular(s, seed), measure_from_angular(s, ConeId::Full)};
}

EquivalenceResult tail_equivalence_check(const SampleBatch& b1, const SampleBatch& b2,
                                         const std::vector<ConeRect>& rects, std::size_t k,
                                         Scaling s, double cv_tol) {
  if (b1.n() != b2.n()) throw PreconditionError("tail_equivalence_check: batches differ in size");
  EquivalenceResult res;
  for (const ConeRect& r : rects) {
    double e1 = tail_measure_estimate(b1, k, s, r).value;
    double e2 = tail_measure_estimate(b2, k, s, r).value;
    if (e2 == 0.0) {
      res.warnings.push_back("skipped " + r.describe() + ": zero denominator");
      continue;
    }
    res.ratios.push_back(e1 / e2);
  }
  if (res.ratios.empty()) {
    res.warnings.push_back("no usable rects");
    return res;
  }
  double m = 0.0;
  for (double r : res.ratios) m += r;
  m /= res.ratios.size();
  double var = 0.0;
  for (double r : res.ratios) var += (r - m) * (r - m);
  var /= res.ratios.size();
  res.c_hat = m;
  res.cv = m > 0.0 ? std::sqrt(var) / m : kInf;
  res.pass = res.ratios.size() >= 2 && res.cv <= cv_tol;
  return res;
}

bool angular_finiteness(const Distribution& g) {
  if (!g.cdf) throw PreconditionError("angular_finiteness: empty cdf");
  // E xi = int_0^inf (1 - G). Decade increments must shrink geometrically.
  std::vector<double> inc;
  for (int j = 0; j < 10; ++j) {
    double a = std::pow(10.0, j), b = std::pow(10.0, j + 1);
    inc.push_back(integrate([&](double s) { return 1.0 - g.cdf(s); }, a, b, 1e-10));
  }
  for (int j = 6; j < 10; ++j) {
    if (inc[j] <= 1e-12) continue;
    if (!(inc[j] < 0.95 * inc[j - 1])) return false;
  }
  return true;
}

}  // namespace extremal
