#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "extremal/batch.hpp"
#include "extremal/estimate.hpp"
#include "extremal/measure.hpp"
#include "extremal/numeric.hpp"

namespace extremal {

// Scale/centre pair of one margin. center_limit optionally supplies the
// finite endpoint lim center(t); when absent it is extrapolated where needed.
struct NormFns {
  RealFn scale;
  RealFn center;
  double margin_index = 0.0;
  std::optional<double> center_limit;
};

// scale(tc)/scale(t) -> c^rho and (center(tc) - center(t))/scale(t) -> psi2(c)
// with psi2(c) = k (c^rho - 1)/rho, or k log c when rho = 0.
struct PsiClass {
  double rho = 0.0;
  double k = 0.0;
  RealFn aux;  // auxiliary function for Pi-variation, may be empty

  double psi1(double c) const;
  double psi2(double c) const;
};

struct PsiFit {
  PsiClass klass;
  double residual = 0.0;
};

std::vector<double> geometric_grid(double lo, double hi, std::size_t per_decade);

// Least squares fit of rho on log psi1 and of k on the psi2 basis, using the
// the largest t with Aitken extrapolation of each ratio. |rho| or |k| below
// 1e-6 snap to 0; residual is the max fit error over the c grid.
// ClassificationFailure when the ratios do not settle.
PsiFit psi_classify(const NormFns& f, const std::vector<double>& t_grid,
                    const std::vector<double>& c_grid);
PsiFit psi_classify(const NormFns& f);  // t in 1e2..1e8, c in {0.5, 2, 4, 10}

// Strictly monotone function with its inverse. For increasing f the inverse
// is the left-continuous f<-(x) = inf{ y : f(y) >= x }; for decreasing f it
// is inf{ y : f(y) <= x }.
class MonotoneFn {
 public:
  enum class Direction { Increasing, Decreasing };

  MonotoneFn(RealFn forward, RealFn inverse, Direction dir);

  double operator()(double x) const { return forward_(x); }
  double inverse(double y) const { return inverse_(y); }
  Direction direction() const noexcept { return dir_; }

  // Inverse by bisection on [lo, hi].
  static MonotoneFn with_numeric_inverse(RealFn forward, Direction dir, double lo, double hi);

 private:
  RealFn forward_;
  RealFn inverse_;
  Direction dir_;
};

// y -> 1/(1 - F(y)); inverse b(t) = F<-(1 - 1/t). Throws PreconditionError if
// F jumps anywhere in its upper tail (probed on a quantile ladder).
MonotoneFn marginal_standardizer(const RealFn& cdf);

// (1 + gamma y)^{1/gamma}, e^y for gamma = 0; PreconditionError when
// 1 + gamma y <= 0.
double ev_margin_transform(double gamma, double y);

struct MonotoneOptions {
  double t_lo = 1.0;
  double t_hi = 1e10;
  std::size_t per_decade = 40;
  double tolerance = 0.05;  // on the last decade
};

// Running extremum of f on a geometric grid, nudged to be strict and
// interpolated log-linearly (multiplicatively in the RV case, additively in
// the Pi case, which is selected by klass.aux). ClassificationFailure when
// the equivalent drifts from f by more than the tolerance over the last decade.
MonotoneFn monotone_equivalent(const RealFn& f, const PsiClass& klass,
                               const MonotoneOptions& opts = {});

// The lambda of the standardisation result together with the map from x to
// the threshold on X*/t: the event (lambda(X*) - beta(t))/alpha(t) <= x is
// asymptotically {X*/t <= z} when lambda increases and {X*/t >= z} when it
// decreases.
class LambdaTransform {
 public:
  LambdaTransform(MonotoneFn lambda, PsiClass klass, std::optional<double> endpoint,
                  std::string regime);

  double operator()(double s) const { return lambda_(s); }
  const MonotoneFn& lambda() const noexcept { return lambda_; }
  const PsiClass& klass() const noexcept { return klass_; }
  std::optional<double> endpoint() const noexcept { return endpoint_; }
  const std::string& regime() const noexcept { return regime_; }
  bool increasing() const noexcept {
    return lambda_.direction() == MonotoneFn::Direction::Increasing;
  }

  // z(x) in [0, inf].
  double threshold(double x) const;
  // Limit of t P((lambda(X*) - beta(t))/alpha(t) <= x, Y*/t > y) given the
  // standard measure of (X*, Y*) on the upper strip.
  double predicted(const TailMeasure& standard, double x, double y) const;

 private:
  MonotoneFn lambda_;
  PsiClass klass_;
  std::optional<double> endpoint_;
  std::string regime_;
};

// ObstructionError for (rho, k) = (0, 0).
LambdaTransform build_lambda(const NormFns& alpha_beta, const PsiClass& klass,
                             const MonotoneOptions& opts = {});

// X* = (X - beta(Y*)) Y* / alpha(Y*).
std::vector<double> remark_standardize(const std::vector<double>& xs,
                                       const std::vector<double>& ystar,
                                       const NormFns& alpha_beta);

struct ObstructionCandidate {
  std::string name;
  RealFn f;  // monotone transform of X
};

struct ObstructionVerdict {
  std::string name;
  bool degenerate_in_x = false;
  bool product = false;
  double x_spread = 0.0;       // max over y of the range in x, relative to the row max
  double product_defect = 0.0; // relative factorisation defect
  bool acceptable() const noexcept { return degenerate_in_x || product; }
};

// For each candidate f, the empirical limit m(x,y) of (f(X)/t, Y*/t) on
// UpperRects over xs x ys. Degenerate when every row varies by at most
// flat_tol in x; product when the relative factorisation defect is at most
// product_tol.
std::vector<ObstructionVerdict> obstruction_check(const SampleBatch& b, std::size_t k,
                                                  const std::vector<ObstructionCandidate>& fs,
                                                  const std::vector<double>& xs,
                                                  const std::vector<double>& ys,
                                                  double flat_tol = 0.05,
                                                  double product_tol = 0.1);

}  // namespace extremal
