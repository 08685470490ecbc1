#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "extremal/batch.hpp"
#include "extremal/distribution.hpp"
#include "extremal/measure.hpp"
#include "extremal/numeric.hpp"

namespace extremal {

// Angular measure on [0,1): atoms plus a density on (lo, hi) within (0,1).
// The polar map is (x, y) -> (x + y, x / (x + y)), so theta = 0 is the
// vertical axis.
class AngularMeasure {
 public:
  AngularMeasure(std::vector<Atom> atoms, RealFn density, double density_lo,
                 double density_hi, bool finite_total, std::string label);

  static AngularMeasure atoms_only(std::vector<Atom> atoms, std::string label);

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  double density(double theta) const;
  bool has_density() const noexcept { return static_cast<bool>(density_); }
  double density_lo() const noexcept { return lo_; }
  double density_hi() const noexcept { return hi_; }
  bool finite_total() const noexcept { return finite_total_; }
  const std::string& label() const noexcept { return label_; }

  // Integral of w(theta) S(d theta) over [a, b] with a <= b <= 1, atoms in
  // [a, b] included. b = 1 on an infinite measure raises DivergentIntegral
  // unless w vanishes fast enough at 1, which is the caller's business.
  double integrate(const RealFn& w, double a, double b) const;
  double mass(double a, double b) const;
  // S([0,1)); DivergentIntegral when finite_total is false.
  double total() const;

  // Same measure without its atoms.
  AngularMeasure continuous_part() const;

 private:
  std::vector<Atom> atoms_;
  RealFn density_;
  double lo_;
  double hi_;
  bool finite_total_;
  std::string label_;
};

// Catalog of named measures used across the tools:
//   uniform2   2 dw
//   inv1mw     dw / (1 - w)                     (infinite)
//   ex51iii    delta_{1/2} + density 1/4 t^{-3/2}(1-t)^{-3/2} on (1/2,1)  (infinite)
//   ex51iv     2 delta_{1/2}
//   ex53:<G>   image of G under s -> s/(1+s), see angular_from_ratio_law
AngularMeasure angular_from_name(const std::string& name);
AngularMeasure uniform2_angular();
AngularMeasure inv1mw_angular();
// atom_mass lets callers rebuild the measure with a stated mass.
AngularMeasure ex51iii_angular(double atom_mass = 1.0);
AngularMeasure ex51iv_angular();

// S for (R xi, R) with R Pareto(1) and xi ~ G: an atom of G at s becomes an
// atom at s/(1+s) with mass (1+s) times its weight, and a density g becomes
// g(t/(1-t)) / (1-t)^3. finite_total is decided by angular_finiteness(G).
AngularMeasure angular_from_ratio_law(const Distribution& g);

// |int_0^1 (1-w) S(dw) - 1|.
double normalization_defect(const AngularMeasure& s);

// mu{[0,x] x (y,inf]} = y^{-1} int_0^p (1-w) S(dw) - x^{-1} int_0^p w S(dw),
// p = x / (x + y). Atoms at theta <= p count.
double mu_from_S(const AngularMeasure& s, double x, double y);

// Limit measure with this angular measure, E(x,y) = int min(w/x, (1-w)/y) S(dw)
// with the missing constraint dropped for negative arguments. Lives on the
// upper strip, or on the full cone when S is finite.
TailMeasure measure_from_angular(const AngularMeasure& s, ConeId cone);

// H**(x) = mu_from_S(S, x, 1); requires normalization_defect <= 1e-8.
double h_star(const AngularMeasure& s, double x);

struct Polar {
  double r = 0.0;
  double theta = 0.0;
};
Polar polar(Point p);
Point unpolar(double r, double theta);

struct AngularEstimate {
  double value = 0.0;
  double stderr_ = 0.0;
  std::size_t k = 0;
  std::size_t count = 0;
};

// (1/k) #{ i : R_i / t > 1, Theta_i in [lo, hi] } with t = n/k, computed on the
// batch as given (callers standardise first). The threshold is the fixed
// radius t rather than the k-th largest radius: on the upper strip S may be
// infinite near theta = 1 and then the top-k radii all sit near the
// horizontal axis.
AngularEstimate angular_window_estimate(const SampleBatch& b, std::size_t k, double lo,
                                        double hi);
// Window [0, eta].
AngularEstimate S_from_mu_empirical(const SampleBatch& b, std::size_t k, double eta);

}  // namespace extremal
