#pragma once

#include <optional>
#include <string>
#include <vector>

#include "extremal/numeric.hpp"

namespace extremal {

struct Atom {
  double location = 0.0;
  double mass = 0.0;
};

// A univariate law on the real line described by its cdf and quantile.
// The optional pieces (pdf, atoms, support) let angular and density code
// split the law into a continuous and a discrete part.
struct Distribution {
  std::string name;
  RealFn cdf;
  RealFn quantile;
  RealFn pdf;                  // density of the continuous part, may be empty
  std::vector<Atom> atoms;     // discrete part
  double support_lo = 0.0;
  double support_hi = kInf;
};

Distribution uniform_distribution(double a = 0.0, double b = 1.0);
// P(X > x) = (x / scale)^{-index} for x >= scale.
Distribution pareto_distribution(double index, double scale = 1.0);
Distribution exponential_distribution(double rate = 1.0);
Distribution point_mass(double at);
// Standard normal restricted to [0, inf): the cdf of |N(0,1)|.
Distribution half_normal_distribution();

// Parse names like "uniform", "pareto:0.5", "point:1", "exp:2", "halfnormal".
Distribution distribution_from_name(const std::string& name);

}  // namespace extremal
