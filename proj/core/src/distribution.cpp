#include "extremal/distribution.hpp"

#include <cmath>
#include <string>

#include "extremal/errors.hpp"

namespace extremal {

Distribution uniform_distribution(double a, double b) {
  if (!(a < b)) throw PreconditionError("uniform: need a < b");
  Distribution d;
  d.name = (a == 0.0 && b == 1.0) ? "uniform" : "uniform:" + std::to_string(a) + ":" + std::to_string(b);
  d.cdf = [a, b](double x) { return x <= a ? 0.0 : (x >= b ? 1.0 : (x - a) / (b - a)); };
  d.quantile = [a, b](double p) { return a + p * (b - a); };
  d.pdf = [a, b](double x) { return (x >= a && x <= b) ? 1.0 / (b - a) : 0.0; };
  d.support_lo = a;
  d.support_hi = b;
  return d;
}

Distribution pareto_distribution(double index, double scale) {
  if (!(index > 0.0) || !(scale > 0.0)) throw PreconditionError("pareto: need index, scale > 0");
  Distribution d;
  d.name = "pareto:" + std::to_string(index);
  d.cdf = [index, scale](double x) { return x <= scale ? 0.0 : 1.0 - std::pow(x / scale, -index); };
  d.quantile = [index, scale](double p) { return scale * std::pow(1.0 - p, -1.0 / index); };
  d.pdf = [index, scale](double x) {
    return x < scale ? 0.0 : index / scale * std::pow(x / scale, -index - 1.0);
  };
  d.support_lo = scale;
  return d;
}

Distribution exponential_distribution(double rate) {
  if (!(rate > 0.0)) throw PreconditionError("exponential: need rate > 0");
  Distribution d;
  d.name = "exp:" + std::to_string(rate);
  d.cdf = [rate](double x) { return x <= 0 ? 0.0 : -std::expm1(-rate * x); };
  d.quantile = [rate](double p) { return -std::log1p(-p) / rate; };
  d.pdf = [rate](double x) { return x < 0 ? 0.0 : rate * std::exp(-rate * x); };
  return d;
}

Distribution point_mass(double at) {
  Distribution d;
  d.name = "point:" + std::to_string(at);
  d.cdf = [at](double x) { return x >= at ? 1.0 : 0.0; };
  d.quantile = [at](double) { return at; };
  d.atoms = {{at, 1.0}};
  d.support_lo = at;
  d.support_hi = at;
  return d;
}

Distribution half_normal_distribution() {
  Distribution d;
  d.name = "halfnormal";
  d.cdf = [](double x) { return x <= 0 ? 0.0 : std::erf(x / std::sqrt(2.0)); };
  d.quantile = [cdf = d.cdf](double p) {
    double lo = 0.0, hi = 1.0;
    while (cdf(hi) < p) hi *= 2.0;
    for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
      double mid = 0.5 * (lo + hi);
      (cdf(mid) < p ? lo : hi) = mid;
    }
    return hi;
  };
  d.pdf = [](double x) { return x < 0 ? 0.0 : std::sqrt(2.0 / M_PI) * std::exp(-0.5 * x * x); };
  return d;
}

namespace {
double parse_param(const std::string& name, const std::string& text) {
  try {
    std::size_t used = 0;
    double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("bad parameter '" + text + "' in distribution '" + name + "'");
  }
}
}  // namespace

Distribution distribution_from_name(const std::string& name) {
  auto colon = name.find(':');
  std::string head = name.substr(0, colon);
  std::string tail = colon == std::string::npos ? "" : name.substr(colon + 1);
  if (head == "uniform" && tail.empty()) return uniform_distribution();
  if (head == "halfnormal") return half_normal_distribution();
  if (tail.empty()) throw ConfigError("unknown distribution '" + name + "'");
  double v = parse_param(name, tail);
  if (head == "pareto") return pareto_distribution(v);
  if (head == "point") return point_mass(v);
  if (head == "exp") return exponential_distribution(v);
  throw ConfigError("unknown distribution '" + name + "'");
}

}  // namespace extremal
