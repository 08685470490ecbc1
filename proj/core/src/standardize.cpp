#include "extremal/standardize.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "extremal/errors.hpp"

namespace extremal {

double PsiClass::psi1(double c) const { return std::pow(c, rho); }

double PsiClass::psi2(double c) const {
  if (k == 0.0) return 0.0;
  if (rho == 0.0) return k * std::log(c);
  return k * (std::pow(c, rho) - 1.0) / rho;
}

std::vector<double> geometric_grid(double lo, double hi, std::size_t per_decade) {
  if (!(lo > 0.0) || !(hi > lo) || per_decade == 0)
    throw PreconditionError("geometric_grid: need 0 < lo < hi and per_decade > 0");
  std::vector<double> g;
  const double step = 1.0 / static_cast<double>(per_decade);
  const double span = std::log10(hi / lo);
  const auto count = static_cast<std::size_t>(std::floor(span * per_decade + 1e-9));
  for (std::size_t j = 0; j <= count; ++j) g.push_back(lo * std::pow(10.0, j * step));
  if (g.back() < hi * (1.0 - 1e-12)) g.push_back(hi);
  return g;
}

namespace {

// Limit of a sequence sampled along increasing t: Aitken on the last three
// values when that is well conditioned, otherwise the last value.
double extrapolate(const std::vector<double>& v) {
  const std::size_t n = v.size();
  if (n < 3) return v.back();
  double a = v[n - 3], b = v[n - 2], c = v[n - 1];
  double d1 = b - a, d2 = c - b;
  double denom = d2 - d1;
  if (std::abs(d2) < 1e-14 * (1.0 + std::abs(c)) || std::abs(denom) < 1e-300) return c;
  double acc = c - d2 * d2 / denom;
  // Reject accelerations that jump far beyond the last step.
  if (!std::isfinite(acc) || std::abs(acc - c) > 10.0 * std::abs(d2)) return c;
  return acc;
}

}  // namespace

PsiFit psi_classify(const NormFns& f, const std::vector<double>& t_grid,
                    const std::vector<double>& c_grid) {
  if (!f.scale || !f.center) throw PreconditionError("psi_classify: NormFns incomplete");
  if (t_grid.size() < 3 || t_grid.back() / t_grid.front() < 1e3)
    throw PreconditionError("psi_classify: t grid must span at least 3 decades");
  std::vector<double> logc, log_l1, l2;
  for (double c : c_grid) {
    if (!(c > 0.0) || c == 1.0) throw PreconditionError("psi_classify: c grid must avoid 0 and 1");
    std::vector<double> r1, r2;
    for (double t : t_grid) {
      double s = f.scale(t);
      if (!(s > 0.0)) throw PreconditionError("psi_classify: scale must be positive");
      r1.push_back(f.scale(t * c) / s);
      r2.push_back((f.center(t * c) - f.center(t)) / s);
    }
    double l1 = extrapolate(r1), d = extrapolate(r2);
    // The last decade of the raw ratios must already sit near the limit.
    const std::size_t n = r1.size();
    std::size_t from = n;
    while (from > 0 && t_grid[from - 1] >= t_grid.back() / 10.0) --from;
    from = std::min(from, n - 2);
    double spread1 = 0.0, spread2 = 0.0;
    for (std::size_t i = from; i < n; ++i) {
      spread1 = std::max(spread1, std::abs(r1[i] / l1 - 1.0));
      spread2 = std::max(spread2, std::abs(r2[i] - d) / (1.0 + std::abs(d)));
    }
    if (!(l1 > 0.0) || spread1 > 0.05 || spread2 > 0.05)
      throw ClassificationFailure("psi_classify: ratios at c = " + std::to_string(c) +
                                  " do not settle (spreads " + std::to_string(spread1) + ", " +
                                  std::to_string(spread2) + ")");
    logc.push_back(std::log(c));
    log_l1.push_back(std::log(l1));
    l2.push_back(d);
  }
  // Regressions through the origin.
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < logc.size(); ++i) {
    sxx += logc[i] * logc[i];
    sxy += logc[i] * log_l1[i];
  }
  PsiFit fit;
  double rho = sxy / sxx;
  if (std::abs(rho) < 1e-6) rho = 0.0;
  std::vector<double> basis;
  for (double lc : logc) basis.push_back(rho == 0.0 ? lc : std::expm1(rho * lc) / rho);
  double bb = 0.0, by = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bb += basis[i] * basis[i];
    by += basis[i] * l2[i];
  }
  double k = by / bb;
  if (std::abs(k) < 1e-6) k = 0.0;
  for (std::size_t i = 0; i < logc.size(); ++i) {
    fit.residual = std::max(fit.residual, std::abs(log_l1[i] - rho * logc[i]));
    fit.residual = std::max(fit.residual, std::abs(l2[i] - k * basis[i]));
  }
  fit.klass.rho = rho;
  fit.klass.k = k;
  if (rho == 0.0 && k != 0.0) fit.klass.aux = f.scale;
  return fit;
}

PsiFit psi_classify(const NormFns& f) {
  return psi_classify(f, geometric_grid(1e2, 1e8, 1), {0.5, 2.0, 4.0, 10.0});
}

MonotoneFn::MonotoneFn(RealFn forward, RealFn inverse, Direction dir)
    : forward_(std::move(forward)), inverse_(std::move(inverse)), dir_(dir) {
  if (!forward_ || !inverse_) throw PreconditionError("MonotoneFn: empty function");
}

MonotoneFn MonotoneFn::with_numeric_inverse(RealFn forward, Direction dir, double lo, double hi) {
  RealFn inv;
  if (dir == Direction::Increasing)
    inv = [forward, lo, hi](double y) { return left_inverse(forward, y, lo, hi); };
  else
    inv = [forward, lo, hi](double y) {
      return left_inverse([&](double x) { return -forward(x); }, -y, lo, hi);
    };
  return MonotoneFn(std::move(forward), std::move(inv), dir);
}

namespace {

// F<-(p) = inf{ y : F(y) >= p } with an expanding bracket.
double cdf_quantile(const RealFn& cdf, double p) {
  double hi = 1.0;
  for (int i = 0; i < 2000 && cdf(hi) < p; ++i) hi = hi < 1.0 ? 1.0 : 2.0 * hi;
  double lo = hi > 1.0 ? hi / 2.0 : 0.0;
  if (cdf(lo) >= p) {
    lo = -1.0;
    for (int i = 0; i < 2000 && cdf(lo) >= p; ++i) lo *= 2.0;
  }
  return left_inverse(cdf, p, lo, hi);
}

}  // namespace

MonotoneFn marginal_standardizer(const RealFn& cdf) {
  if (!cdf) throw PreconditionError("marginal_standardizer: empty cdf");
  // Probe the tail on the ladder p_j = 1 - 10^{-j/4}: a jump of F at a tail
  // quantile shows up as F(y) - F(y - delta) comparable to the tail mass.
  double prev = cdf_quantile(cdf, 0.9);
  for (int j = 5; j <= 40; ++j) {
    double p = 1.0 - std::pow(10.0, -j / 4.0);
    double y = cdf_quantile(cdf, p);
    double delta = std::max(1e-6 * (y - prev), 1e-12 * std::max(1.0, std::abs(y)));
    double below = cdf(y - delta);
    if (cdf(y) - below > 1e-3 * (1.0 - below))
      throw PreconditionError("marginal_standardizer: F has an atom near y = " + std::to_string(y));
    prev = y;
  }
  RealFn forward = [cdf](double y) {
    double s = 1.0 - cdf(y);
    return s > 0.0 ? 1.0 / s : kInf;
  };
  RealFn inverse = [cdf](double t) {
    if (!(t > 1.0)) return cdf_quantile(cdf, 0.0);
    return cdf_quantile(cdf, 1.0 - 1.0 / t);
  };
  return MonotoneFn(forward, inverse, MonotoneFn::Direction::Increasing);
}

double ev_margin_transform(double gamma, double y) {
  if (gamma == 0.0) return std::exp(y);
  double base = 1.0 + gamma * y;
  if (!(base > 0.0)) throw PreconditionError("ev_margin_transform: 1 + gamma y must be positive");
  return std::pow(base, 1.0 / gamma);
}

namespace {

// Piecewise interpolant through (log t_i, v_i), v strictly monotone. In the
// multiplicative mode v is stored as log values.
struct GridCurve {
  std::vector<double> u;  // log t
  std::vector<double> v;
  bool multiplicative = true;

  double forward(double t) const {
    if (!(t > 0.0)) throw PreconditionError("monotone equivalent: argument must be positive");
    double lt = std::log(t);
    std::size_t j;
    if (lt <= u.front())
      j = 0;
    else if (lt >= u.back())
      j = u.size() - 2;
    else
      j = static_cast<std::size_t>(std::upper_bound(u.begin(), u.end(), lt) - u.begin()) - 1;
    double w = (lt - u[j]) / (u[j + 1] - u[j]);
    double val = v[j] + w * (v[j + 1] - v[j]);
    return multiplicative ? std::exp(val) : val;
  }

  double inverse(double y) const {
    double val;
    if (multiplicative) {
      if (!(y > 0.0)) return 0.0;
      val = std::log(y);
    } else {
      val = y;
    }
    const bool inc = v.back() > v.front();
    std::size_t j;
    auto before = [inc](double a, double b) { return inc ? a < b : a > b; };
    if (!before(v.front(), val))
      j = 0;
    else if (!before(val, v.back()))
      j = v.size() - 2;
    else {
      j = 0;
      std::size_t lo = 0, hi = v.size() - 1;
      while (hi - lo > 1) {
        std::size_t mid = (lo + hi) / 2;
        (before(v[mid], val) ? lo : hi) = mid;
      }
      j = lo;
    }
    double w = (val - v[j]) / (v[j + 1] - v[j]);
    return std::exp(u[j] + w * (u[j + 1] - u[j]));
  }
};

}  // namespace

MonotoneFn monotone_equivalent(const RealFn& f, const PsiClass& klass, const MonotoneOptions& opts) {
  if (!f) throw PreconditionError("monotone_equivalent: empty function");
  const bool pi_mode = static_cast<bool>(klass.aux);
  const std::vector<double> ts = geometric_grid(opts.t_lo, opts.t_hi, opts.per_decade);
  std::vector<double> fv;
  for (double t : ts) fv.push_back(f(t));

  bool increasing;
  if (pi_mode && klass.k != 0.0)
    increasing = klass.k > 0.0;
  else if (!pi_mode && klass.rho != 0.0)
    increasing = klass.rho > 0.0;
  else
    increasing = fv.back() >= fv.front();

  if (!pi_mode)
    for (double v : fv)
      if (!(v > 0.0)) throw PreconditionError("monotone_equivalent: RV mode needs f > 0 on the grid");

  // Running extremum, nudged by a relative 1e-9 (or 1e-9 aux) so flat
  // stretches become strictly monotone. Already strict f is kept as is.
  constexpr double eta = 1e-9;
  std::vector<double> g(fv.size());
  g[0] = fv[0];
  for (std::size_t i = 1; i < fv.size(); ++i) {
    double nudge = pi_mode ? eta * std::abs(klass.aux(ts[i])) + eta * 1e-6 : 0.0;
    if (increasing)
      g[i] = pi_mode ? std::max(fv[i], g[i - 1] + nudge) : std::max(fv[i], g[i - 1] * (1.0 + eta));
    else
      g[i] = pi_mode ? std::min(fv[i], g[i - 1] - nudge) : std::min(fv[i], g[i - 1] * (1.0 - eta));
  }

  double worst = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (ts[i] < opts.t_hi / 10.0) continue;
    double dev = pi_mode ? std::abs(g[i] - fv[i]) / std::abs(klass.aux(ts[i]))
                         : std::abs(g[i] / fv[i] - 1.0);
    worst = std::max(worst, dev);
  }
  if (!(worst <= opts.tolerance))
    throw ClassificationFailure("monotone_equivalent: the monotone envelope stays " +
                                std::to_string(worst) + " away from f over the last decade");

  auto curve = std::make_shared<GridCurve>();
  curve->multiplicative = !pi_mode;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    curve->u.push_back(std::log(ts[i]));
    curve->v.push_back(pi_mode ? g[i] : std::log(g[i]));
  }
  return MonotoneFn([curve](double t) { return curve->forward(t); },
                    [curve](double y) { return curve->inverse(y); },
                    increasing ? MonotoneFn::Direction::Increasing : MonotoneFn::Direction::Decreasing);
}

LambdaTransform::LambdaTransform(MonotoneFn lambda, PsiClass klass, std::optional<double> endpoint,
                                 std::string regime)
    : lambda_(std::move(lambda)), klass_(std::move(klass)), endpoint_(endpoint), regime_(std::move(regime)) {}

double LambdaTransform::threshold(double x) const {
  const double rho = klass_.rho, k = klass_.k;
  if (k == 0.0) {
    if (rho > 0.0) return x <= 0.0 ? 0.0 : std::pow(x, 1.0 / rho);
    return x >= 0.0 ? kInf : std::pow(-x, 1.0 / rho);
  }
  if (rho == 0.0) return std::exp(x / k);
  double base = 1.0 + rho * x / k;
  if (!(base > 0.0)) return rho > 0.0 ? 0.0 : kInf;
  return std::pow(base, 1.0 / rho);
}

double LambdaTransform::predicted(const TailMeasure& standard, double x, double y) const {
  const double z = threshold(x);
  if (increasing()) return standard.eval(ConeRect::upper(z, y));
  // {u >= z, v > y}; the line u = z carries no mass for z > 0.
  if (z == 0.0) return standard.eval(ConeRect::upper(kInf, y));
  return standard.survival(z, y);
}

namespace {

MonotoneFn negate(const MonotoneFn& g) {
  return MonotoneFn([g](double t) { return -g(t); }, [g](double y) { return g.inverse(-y); },
                    g.direction() == MonotoneFn::Direction::Increasing ? MonotoneFn::Direction::Decreasing
                                                                       : MonotoneFn::Direction::Increasing);
}

// lim beta(t) for rho < 0, from beta(t) + alpha(t) k/|rho|, checked to settle
// within 5% of alpha over the last grid step.
double endpoint(const NormFns& ab, const PsiClass& klass, const MonotoneOptions& opts) {
  if (ab.center_limit) return *ab.center_limit;
  const double t2 = opts.t_hi, t1 = opts.t_hi / 10.0;
  const double shift = klass.rho < 0.0 ? klass.k / std::abs(klass.rho) : 0.0;
  const double b2 = ab.center(t2) + ab.scale(t2) * shift;
  const double b1 = ab.center(t1) + ab.scale(t1) * shift;
  if (!(std::abs(b2 - b1) < 0.05 * ab.scale(t1)))
    throw ClassificationFailure("build_lambda: center does not settle to a finite endpoint");
  return b2;
}

}  // namespace

LambdaTransform build_lambda(const NormFns& ab, const PsiClass& klass, const MonotoneOptions& opts) {
  if (!ab.scale || !ab.center) throw PreconditionError("build_lambda: NormFns incomplete");
  const double rho = klass.rho, k = klass.k;
  using Dir = MonotoneFn::Direction;
  if (rho == 0.0 && k == 0.0)
    throw ObstructionError(
        "build_lambda: (psi1, psi2) = (1, 0) admits no standardizing function; every monotone "
        "normalization leads to a product or degenerate limit");

  if (rho > 0.0 && k == 0.0)
    return LambdaTransform(monotone_equivalent(ab.scale, {rho, 0.0, {}}, opts), klass, std::nullopt,
                           "rho>0,k=0: lambda = alpha~");

  if (rho > 0.0) {
    if (k > 0.0)
      return LambdaTransform(monotone_equivalent(ab.center, {rho, k, {}}, opts), klass, std::nullopt,
                             "rho>0,k>0: lambda = beta~");
    RealFn neg = [c = ab.center](double t) { return -c(t); };
    return LambdaTransform(negate(monotone_equivalent(neg, {rho, -k, {}}, opts)), klass, std::nullopt,
                           "rho>0,k<0: lambda = -(-beta)~");
  }

  if (rho == 0.0 && k > 0.0) {
    if (ab.center_limit) {
      // Finite endpoint B: beta* = 1/(B - beta) is Pi-varying with auxiliary
      // alpha/(B - beta)^2 and unbounded, so its equivalent can be inverted back.
      const double b = *ab.center_limit;
      RealFn star = [c = ab.center, b](double t) { return 1.0 / (b - c(t)); };
      RealFn aux = [c = ab.center, s = ab.scale, b](double t) {
        double d = b - c(t);
        return s(t) / (d * d);
      };
      MonotoneFn g = monotone_equivalent(star, {0.0, k, aux}, opts);
      MonotoneFn lam([g, b](double t) { return b - 1.0 / g(t); },
                     [g, b](double y) { return g.inverse(1.0 / (b - y)); }, Dir::Increasing);
      return LambdaTransform(lam, klass, b, "rho=0,k>0,finite endpoint: lambda = B - 1/beta*~");
    }
    return LambdaTransform(monotone_equivalent(ab.center, {0.0, k, ab.scale}, opts), klass, std::nullopt,
                           "rho=0,k>0: lambda = beta~");
  }

  if (rho == 0.0) {  // k < 0
    bool positive = true;
    for (double t : geometric_grid(opts.t_lo, opts.t_hi, 4))
      if (!(ab.center(t) > 0.0)) positive = false;
    if (positive) {
      // 1/beta is Pi-varying with positive coefficient and auxiliary alpha/beta^2.
      RealFn recip = [c = ab.center](double t) { return 1.0 / c(t); };
      RealFn aux = [c = ab.center, s = ab.scale](double t) {
        double v = c(t);
        return s(t) / (v * v);
      };
      MonotoneFn g = monotone_equivalent(recip, {0.0, -k, aux}, opts);
      MonotoneFn lam([g](double t) { return 1.0 / g(t); }, [g](double y) { return g.inverse(1.0 / y); },
                     Dir::Decreasing);
      return LambdaTransform(lam, klass, std::nullopt, "rho=0,k<0: lambda = 1/(1/beta)~");
    }
    RealFn neg = [c = ab.center](double t) { return -c(t); };
    return LambdaTransform(negate(monotone_equivalent(neg, {0.0, -k, ab.scale}, opts)), klass,
                           std::nullopt, "rho=0,k<0: lambda = -(-beta)~");
  }

  // rho < 0: the centre converges to a finite endpoint B.
  const double b = endpoint(ab, klass, opts);
  if (k == 0.0) {
    MonotoneFn a = monotone_equivalent(ab.scale, {rho, 0.0, {}}, opts);
    MonotoneFn lam([a, b](double t) { return b - a(t); }, [a, b](double y) { return a.inverse(b - y); },
                   Dir::Increasing);
    return LambdaTransform(lam, klass, b, "rho<0,k=0: lambda = B - alpha~");
  }
  RealFn gap = [c = ab.center, b](double t) { return std::abs(c(t) - b); };
  MonotoneFn g = monotone_equivalent(gap, {rho, 0.0, {}}, opts);
  const double sign = k < 0.0 ? 1.0 : -1.0;
  MonotoneFn lam([g, b, sign](double t) { return b + sign * g(t); },
                 [g, b, sign](double y) { return g.inverse(sign * (y - b)); },
                 k < 0.0 ? Dir::Decreasing : Dir::Increasing);
  return LambdaTransform(lam, klass, b, "rho<0,k!=0: lambda = B + sign * |beta - B|~");
}

std::vector<double> remark_standardize(const std::vector<double>& xs, const std::vector<double>& ystar,
                                       const NormFns& ab) {
  if (xs.size() != ystar.size()) throw PreconditionError("remark_standardize: length mismatch");
  std::vector<double> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double y = ystar[i];
    out[i] = (xs[i] - ab.center(y)) * y / ab.scale(y);
  }
  return out;
}

std::vector<ObstructionVerdict> obstruction_check(const SampleBatch& b, std::size_t k,
                                                  const std::vector<ObstructionCandidate>& fs,
                                                  const std::vector<double>& xs,
                                                  const std::vector<double>& ys, double flat_tol,
                                                  double product_tol) {
  std::vector<ObstructionVerdict> out;
  const std::size_t nx = xs.size(), ny = ys.size();
  for (const ObstructionCandidate& cand : fs) {
    SampleBatch tb = transform(b, cand.f, nullptr);
    std::vector<double> m(nx * ny);
    double top = 0.0;
    for (std::size_t i = 0; i < nx; ++i)
      for (std::size_t j = 0; j < ny; ++j) {
        m[i * ny + j] = tail_measure_estimate(tb, k, Scaling{1.0, 1.0}, ConeRect::upper(xs[i], ys[j])).value;
        top = std::max(top, m[i * ny + j]);
      }
    ObstructionVerdict v;
    v.name = cand.name;
    for (std::size_t j = 0; j < ny; ++j) {
      double lo = kInf, hi = 0.0;
      for (std::size_t i = 0; i < nx; ++i) {
        lo = std::min(lo, m[i * ny + j]);
        hi = std::max(hi, m[i * ny + j]);
      }
      v.x_spread = std::max(v.x_spread, top > 0.0 ? (hi - lo) / top : 0.0);
    }
    double defect = 0.0, ref = 0.0;
    for (std::size_t i = 0; i < nx; ++i)
      for (std::size_t i2 = i + 1; i2 < nx; ++i2)
        for (std::size_t j = 0; j < ny; ++j)
          for (std::size_t j2 = j + 1; j2 < ny; ++j2) {
            double a = m[i * ny + j] * m[i2 * ny + j2], c = m[i * ny + j2] * m[i2 * ny + j];
            defect = std::max(defect, std::abs(a - c));
            ref = std::max({ref, a, c});
          }
    v.product_defect = ref > 0.0 ? defect / ref : 0.0;
    v.degenerate_in_x = v.x_spread <= flat_tol;
    v.product = v.product_defect <= product_tol;
    out.push_back(v);
  }
  return out;
}

}  // namespace extremal
