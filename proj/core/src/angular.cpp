#include "extremal/angular.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "extremal/errors.hpp"
#include "extremal/estimate.hpp"
#include "extremal/extend.hpp"

namespace extremal {

namespace {
constexpr double kInfD = std::numeric_limits<double>::infinity();
}

AngularMeasure::AngularMeasure(std::vector<Atom> atoms, RealFn density, double density_lo,
                               double density_hi, bool finite_total, std::string label)
    : atoms_(std::move(atoms)),
      density_(std::move(density)),
      lo_(density_lo),
      hi_(density_hi),
      finite_total_(finite_total),
      label_(std::move(label)) {
  std::sort(atoms_.begin(), atoms_.end(),
            [](const Atom& a, const Atom& b) { return a.location < b.location; });
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    const Atom& a = atoms_[i];
    if (!(a.location >= 0.0 && a.location < 1.0))
      throw PreconditionError(label_ + ": atom location outside [0,1)");
    if (!(a.mass > 0.0) || std::isinf(a.mass))
      throw PreconditionError(label_ + ": atom mass must be positive and finite");
    if (i > 0 && atoms_[i - 1].location == a.location)
      throw PreconditionError(label_ + ": duplicate atom location");
  }
  if (density_ && !(0.0 <= lo_ && lo_ < hi_ && hi_ <= 1.0))
    throw PreconditionError(label_ + ": density support must satisfy 0 <= lo < hi <= 1");
}

AngularMeasure AngularMeasure::atoms_only(std::vector<Atom> atoms, std::string label) {
  return AngularMeasure(std::move(atoms), nullptr, 0.0, 1.0, true, std::move(label));
}

double AngularMeasure::density(double theta) const {
  if (!density_ || !(theta > lo_ && theta < hi_)) return 0.0;
  return density_(theta);
}

double AngularMeasure::integrate(const RealFn& w, double a, double b) const {
  a = std::max(a, 0.0);
  b = std::min(b, 1.0);
  if (!(a <= b)) return 0.0;
  double total = 0.0;
  for (const Atom& atom : atoms_)
    if (atom.location >= a && atom.location <= b) total += atom.mass * w(atom.location);
  if (density_) {
    double lo = std::max(a, lo_), hi = std::min(b, hi_);
    if (lo < hi)
      total += extremal::integrate([&](double th) { return w(th) * density_(th); }, lo, hi);
  }
  return total;
}

double AngularMeasure::mass(double a, double b) const {
  if (!finite_total_ && b >= hi_ && hi_ >= 1.0)
    throw DivergentIntegral(label_ + ": S has infinite mass near theta = 1");
  return integrate([](double) { return 1.0; }, a, b);
}

double AngularMeasure::total() const {
  if (!finite_total_) throw DivergentIntegral(label_ + ": total mass S([0,1)) is infinite");
  return integrate([](double) { return 1.0; }, 0.0, 1.0);
}

AngularMeasure AngularMeasure::continuous_part() const {
  return AngularMeasure({}, density_, lo_, hi_, finite_total_, label_ + "/continuous");
}

AngularMeasure uniform2_angular() {
  return AngularMeasure({}, [](double) { return 2.0; }, 0.0, 1.0, true, "uniform2");
}

AngularMeasure inv1mw_angular() {
  return AngularMeasure({}, [](double w) { return 1.0 / (1.0 - w); }, 0.0, 1.0, false, "inv1mw");
}

AngularMeasure ex51iii_angular(double atom_mass) {
  return AngularMeasure(
      {{0.5, atom_mass}},
      [](double th) { return 0.25 * std::pow(th, -1.5) * std::pow(1.0 - th, -1.5); }, 0.5, 1.0,
      false, "ex51iii");
}

AngularMeasure ex51iv_angular() { return AngularMeasure::atoms_only({{0.5, 2.0}}, "ex51iv"); }

AngularMeasure angular_from_ratio_law(const Distribution& g) {
  std::vector<Atom> atoms;
  for (const Atom& a : g.atoms) {
    if (a.location < 0.0) throw PreconditionError("ratio law must live on [0, inf)");
    atoms.push_back({a.location / (1.0 + a.location), (1.0 + a.location) * a.mass});
  }
  RealFn dens;
  double lo = 0.0, hi = 1.0;
  if (g.pdf) {
    RealFn pdf = g.pdf;
    dens = [pdf](double th) {
      double om = 1.0 - th;
      return pdf(th / om) / (om * om * om);
    };
    lo = std::max(g.support_lo, 0.0);
    lo = lo / (1.0 + lo);
    hi = std::isinf(g.support_hi) ? 1.0 : g.support_hi / (1.0 + g.support_hi);
  }
  return AngularMeasure(std::move(atoms), dens, lo, hi, angular_finiteness(g), "ex53:" + g.name);
}

AngularMeasure angular_from_name(const std::string& name) {
  if (name == "uniform2") return uniform2_angular();
  if (name == "inv1mw") return inv1mw_angular();
  if (name == "ex51iii") return ex51iii_angular();
  if (name == "ex51iv") return ex51iv_angular();
  if (name.rfind("ex53:", 0) == 0) return angular_from_ratio_law(distribution_from_name(name.substr(5)));
  throw ConfigError("unknown angular measure '" + name +
                    "' (uniform2|inv1mw|ex51iii|ex51iv|ex53:<G>)");
}

double normalization_defect(const AngularMeasure& s) {
  auto weight = [](double w) { return 1.0 - w; };
  if (s.has_density() && s.density_hi() >= 1.0) {
    // Truncation test at theta -> 1: increments over successive cut-offs
    // must shrink for the integral to converge.
    double cut[3] = {1e-6, 1e-9, 1e-12};
    double j[3];
    for (int i = 0; i < 3; ++i) j[i] = s.integrate(weight, 0.0, 1.0 - cut[i]);
    double d1 = j[1] - j[0], d2 = j[2] - j[1];
    if (!std::isfinite(j[2]) || (d2 > 1e-6 && d2 > 0.5 * d1))
      throw DivergentIntegral(s.label() + ": int (1-w) S(dw) diverges at w = 1");
  }
  double v = s.integrate(weight, 0.0, 1.0);
  if (!std::isfinite(v)) throw DivergentIntegral(s.label() + ": int (1-w) S(dw) is not finite");
  return std::abs(v - 1.0);
}

double mu_from_S(const AngularMeasure& s, double x, double y) {
  if (!(x > 0.0) || !(y > 0.0) || std::isinf(y))
    throw PreconditionError("mu_from_S: need x > 0 and 0 < y < inf");
  if (std::isinf(x)) return s.integrate([](double w) { return 1.0 - w; }, 0.0, 1.0) / y;
  double p = x / (x + y);
  double a = s.integrate([](double w) { return 1.0 - w; }, 0.0, p);
  double b = s.integrate([](double w) { return w; }, 0.0, p);
  return a / y - b / x;
}

TailMeasure measure_from_angular(const AngularMeasure& s, ConeId cone) {
  if (cone != ConeId::UpperStrip && !s.finite_total())
    throw DivergentIntegral(s.label() + ": infinite angular measure only defines a limit on the "
                                        "upper strip");
  auto sp = std::make_shared<const AngularMeasure>(s);
  auto survival = [sp](double x, double y) {
    // Weight of direction theta: the largest r^{-1} with (r theta, r(1-theta))
    // in {u > x, v > y}.
    auto phi = [x, y](double th) {
      double fx = x < 0.0 ? kInfD : (th <= 0.0 ? 0.0 : (x == 0.0 ? kInfD : th / x));
      double fy = y < 0.0 ? kInfD : (th >= 1.0 ? 0.0 : (y == 0.0 ? kInfD : (1.0 - th) / y));
      return std::min(fx, fy);
    };
    if (x > 0.0 && y > 0.0) {
      double p = x / (x + y);
      // Split at the kink so each piece is smooth; the atom at p is counted once.
      return sp->integrate(phi, 0.0, p) +
             sp->integrate(phi, std::nextafter(p, 2.0), 1.0);
    }
    return sp->integrate(phi, 0.0, 1.0);
  };
  return TailMeasure(cone, survival, Scaling{1.0, 1.0}, 1.0, "angular:" + s.label());
}

double h_star(const AngularMeasure& s, double x) {
  double defect = normalization_defect(s);
  if (defect > 1e-8)
    throw PreconditionError(s.label() + ": H** needs int (1-w) S(dw) = 1, defect " +
                            std::to_string(defect));
  if (x <= 0.0) return 0.0;
  return mu_from_S(s, x, 1.0);
}

Polar polar(Point p) {
  if (!(p.x >= 0.0 && p.y >= 0.0) || !std::isfinite(p.x) || !std::isfinite(p.y))
    throw PreconditionError("polar: need finite nonnegative coordinates");
  double r = p.x + p.y;
  if (!(r > 0.0)) throw PreconditionError("polar: the origin has no angle");
  return {r, p.x / r};
}

Point unpolar(double r, double theta) {
  if (!(r > 0.0)) throw PreconditionError("unpolar: need r > 0");
  if (!(theta >= 0.0 && theta <= 1.0)) throw PreconditionError("unpolar: need theta in [0,1]");
  return {r * theta, r * (1.0 - theta)};
}

AngularEstimate angular_window_estimate(const SampleBatch& b, std::size_t k, double lo,
                                        double hi) {
  const std::size_t n = b.n();
  check_k(n, k);
  const double t = static_cast<double>(n) / static_cast<double>(k);
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double r = b.xs[i] + b.ys[i];
    if (!(r > t)) continue;
    double th = b.xs[i] / r;
    if (th >= lo && th <= hi) ++count;
  }
  AngularEstimate est;
  est.k = k;
  est.count = count;
  est.value = static_cast<double>(count) / static_cast<double>(k);
  double p = static_cast<double>(count) / static_cast<double>(n);
  est.stderr_ = std::sqrt(p * (1.0 - p) * static_cast<double>(n)) / static_cast<double>(k);
  return est;
}

AngularEstimate S_from_mu_empirical(const SampleBatch& b, std::size_t k, double eta) {
  return angular_window_estimate(b, k, 0.0, eta);
}

}  // namespace extremal
