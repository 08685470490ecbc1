#include "extremal/limits.hpp"

#include <algorithm>
#include <cmath>

#include "extremal/angular.hpp"
#include "extremal/errors.hpp"

namespace extremal {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void miss(const ModelSpec& m, ConeId cone, Form form) {
  throw CatalogMiss("no catalog limit for model " + m.name() + " on cone " + to_string(cone) +
                    (form == Form::Standard ? " (standard form)" : " (natural form)"));
}

// int_0^b F(s) ds for a cdf, split at the atoms and support ends so every
// piece is smooth.
double cdf_integral(const Distribution& f, double b) {
  if (!(b > 0.0)) return 0.0;
  std::vector<double> cuts{0.0, b};
  for (const Atom& a : f.atoms)
    if (a.location > 0.0 && a.location < b) cuts.push_back(a.location);
  for (double s : {f.support_lo, f.support_hi})
    if (s > 0.0 && s < b) cuts.push_back(s);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    double lo = cuts[i], hi = cuts[i + 1];
    // Evaluate strictly inside the piece so a jump at either end does not leak in.
    total += integrate(
        [&](double s) { return f.cdf(std::clamp(s, std::nextafter(lo, hi), std::nextafter(hi, lo))); },
        lo, hi, 1e-12);
  }
  return total;
}

using Survival = TailMeasure::Survival;

TailMeasure ex51_measure(const Ex51& m, ConeId cone, Form form, const ModelSpec& spec) {
  const double a = m.interior_alpha;
  switch (cone) {
    case ConeId::Full:
      // Mass only on the axes: t P(X > tx) = 1/x and t P(Y > ty) = 1/y.
      return TailMeasure(
          cone,
          [](double x, double y) { return x < 0.0 ? 1.0 / y : (y < 0.0 ? 1.0 / x : 0.0); },
          {1.0, 1.0}, 1.0, "ex51/full");
    case ConeId::Interior:
      if (form == Form::Natural)
        return TailMeasure(
            cone, [](double x, double y) { return 1.0 / (x * std::sqrt(y)); },
            {a, 2.0 * (1.0 - a)}, 1.5, "ex51/interior");
      return TailMeasure(
          cone, [a](double x, double y) { return 1.0 / (std::pow(x, a) * std::pow(y, 1.0 - a)); },
          {1.0, 1.0}, 1.0, "ex51/interior/std");
    case ConeId::UpperStrip:
      if (form == Form::Natural)
        return TailMeasure(
            cone,
            [](double x, double y) {
              return x < 0.0 ? 1.0 / y : 1.0 / (std::sqrt(y) * std::max(x, std::sqrt(y)));
            },
            {0.5, 1.0}, std::nullopt, "ex51/upper");
      return TailMeasure(
          cone,
          [](double x, double y) {
            return x < 0.0 ? 1.0 / y : 1.0 / (std::sqrt(y) * std::max(std::sqrt(x), std::sqrt(y)));
          },
          {1.0, 1.0}, 1.0, "ex51/upper/std");
    case ConeId::RightStrip:
      // Catalog form: nu((x,inf] x [0,y]) = 1/x - 1/(x v sqrt y). Simulation
      // gives 1/x instead; see the README.
      if (form == Form::Natural)
        return TailMeasure(
            cone,
            [](double x, double y) { return y < 0.0 ? 1.0 / x : 1.0 / std::max(x, std::sqrt(y)); },
            {1.0, 2.0}, std::nullopt, "ex51/right");
      return TailMeasure(
          cone, [](double x, double y) { return y < 0.0 ? 1.0 / x : 1.0 / std::max(x, y); },
          {1.0, 1.0}, 1.0, "ex51/right/std");
  }
  miss(spec, cone, form);
}

}  // namespace

TailMeasure make_measure(const ModelSpec& model, ConeId cone, Form form) {
  return std::visit(
      overloaded{
          [&](const Ex51& m) { return ex51_measure(m, cone, form, model); },
          [&](const Ex52& m) -> TailMeasure {
            if (cone != ConeId::UpperStrip) miss(model, cone, form);
            const double rho = m.rho;
            if (form == Form::Standard)
              return TailMeasure(
                  cone,
                  [rho](double x, double y) {
                    if (x <= 0.0) return 1.0 / y;
                    return std::min(1.0, std::pow(y / x, rho)) / y;
                  },
                  {1.0, 1.0}, 1.0, "ex52/upper/std");
            // Pair (X^rho, Y) under (t^rho, t): mu([0,x] x (y,inf]) = H(x / y^rho) / y.
            return TailMeasure(
                cone,
                [rho](double x, double y) {
                  if (x <= 0.0) return 1.0 / y;
                  return std::min(1.0, std::pow(y, rho) / x) / y;
                },
                {rho, 1.0}, std::nullopt, "ex52/upper");
          },
          [&](const Ex53& m) -> TailMeasure {
            if (cone != ConeId::UpperStrip) miss(model, cone, form);
            Distribution g = m.g;
            return TailMeasure(
                cone,
                [g](double x, double y) {
                  if (x < 0.0) return 1.0 / y;
                  if (x == 0.0) return (1.0 - g.cdf(0.0)) / y;
                  return 1.0 / y - cdf_integral(g, x / y) / x;
                },
                {1.0, 1.0}, 1.0, "ex53/upper(" + g.name + ")");
          },
          [&](const FromAngular& m) { return measure_from_angular(*m.s, cone); },
          [&](const ProductLimit& m) -> TailMeasure {
            if (cone != ConeId::UpperStrip) miss(model, cone, form);
            Distribution h = m.h;
            if (form == Form::Natural)
              return TailMeasure(
                  cone,
                  [h](double x, double y) { return x < 0.0 ? 1.0 / y : (1.0 - h.cdf(x)) / y; },
                  {0.0, 1.0}, std::nullopt, "product/upper(" + h.name + ")");
            // (X Y*, Y*): mu([0,x] x (y,inf]) = int_0^{1/y} H(x v) dv.
            return TailMeasure(
                cone,
                [h](double x, double y) {
                  if (x < 0.0) return 1.0 / y;
                  if (x == 0.0) return (1.0 - h.cdf(0.0)) / y;
                  return 1.0 / y - cdf_integral(h, x / y) / x;
                },
                {1.0, 1.0}, 1.0, "product/upper/std(" + h.name + ")");
          },
          [&](const DiagonalPareto&) {
            return TailMeasure(
                cone, [](double x, double y) { return 1.0 / std::max(x, y); }, {1.0, 1.0}, 1.0,
                "diagonal/" + to_string(cone));
          },
      },
      model.variant);
}

DataMap prelimit_map(const ModelSpec& model, ConeId cone, Form form) {
  make_measure(model, cone, form);  // same catalog coverage
  DataMap id = [](double x, double y) { return Point{x, y}; };
  return std::visit(
      overloaded{
          [&](const Ex51& m) -> DataMap {
            if (form == Form::Natural || cone == ConeId::Full) return id;
            switch (cone) {
              case ConeId::UpperStrip:
                return [](double x, double y) { return Point{x * x, y}; };
              case ConeId::RightStrip:
                return [](double x, double y) { return Point{x, std::sqrt(y)}; };
              default: {
                const double a = m.interior_alpha;
                return [a](double x, double y) {
                  return Point{std::pow(x, 1.0 / a), std::pow(y, 1.0 / (2.0 * (1.0 - a)))};
                };
              }
            }
          },
          [&](const Ex52& m) -> DataMap {
            if (form == Form::Standard) return id;
            const double rho = m.rho;
            return [rho](double x, double y) { return Point{std::pow(x, rho), y}; };
          },
          [&](const ProductLimit&) -> DataMap {
            if (form == Form::Natural) return id;
            return [](double x, double y) { return Point{x * y, y}; };
          },
          [&](const auto&) -> DataMap { return id; },
      },
      model.variant);
}

SampleBatch apply_map(const DataMap& map, const SampleBatch& b) {
  SampleBatch out;
  out.model = b.model;
  out.seed = b.seed;
  out.xs.resize(b.n());
  out.ys.resize(b.n());
  for (std::size_t i = 0; i < b.n(); ++i) {
    Point p = map(b.xs[i], b.ys[i]);
    out.xs[i] = p.x;
    out.ys[i] = p.y;
  }
  return out;
}

double check_homogeneity(const TailMeasure& m, double c, const ConeRect& r) {
  if (!m.hom_order())
    throw PreconditionError(m.label() + " has no homogeneity order");
  return std::abs(m.eval(scale(c, r)) - std::pow(c, -*m.hom_order()) * m.eval(r));
}

ProductTestResult product_test(const TailMeasure& m, const std::vector<double>& xs,
                               const std::vector<double>& ys, double rel_tol) {
  const std::size_t nx = xs.size(), ny = ys.size();
  std::vector<double> v(nx * ny);
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j) v[i * ny + j] = m.eval(ConeRect::upper(xs[i], ys[j]));
  ProductTestResult res;
  double scale_ref = 0.0;
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t i2 = i + 1; i2 < nx; ++i2)
      for (std::size_t j = 0; j < ny; ++j)
        for (std::size_t j2 = j + 1; j2 < ny; ++j2) {
          double a = v[i * ny + j] * v[i2 * ny + j2];
          double b = v[i * ny + j2] * v[i2 * ny + j];
          res.defect = std::max(res.defect, std::abs(a - b));
          scale_ref = std::max({scale_ref, std::abs(a), std::abs(b)});
        }
  res.relative_defect = scale_ref > 0.0 ? res.defect / scale_ref : 0.0;
  res.is_product = res.relative_defect <= rel_tol;
  return res;
}

ProductTestResult product_test(const TailMeasure& m) {
  return product_test(m, {0.5, 1.0, 2.0, 4.0}, {0.5, 1.0, 2.0, 4.0});
}

ConditionalLaw conditional_H(const TailMeasure& m) {
  const double norm = m.eval(ConeRect::upper(kInf, 1.0));
  if (!(norm > 0.0) || !std::isfinite(norm))
    throw PreconditionError(m.label() + ": conditional law needs 0 < m([0,inf] x (1,inf]) < inf, got " +
                            std::to_string(norm));
  return {[m, norm](double x) {
    if (x < 0.0) return 0.0;
    return std::clamp(m.eval(ConeRect::upper(x, 1.0)) / norm, 0.0, 1.0);
  }};
}

}  // namespace extremal
