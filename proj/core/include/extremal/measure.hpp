#pragma once

#include <functional>
#include <optional>
#include <string>

#include "extremal/cones.hpp"

namespace extremal {

// Normalising exponents: the prelimit uses (X / t^p, Y / t^q).
struct Scaling {
  double p = 1.0;
  double q = 1.0;
};

// A limit measure on one cone, represented by its joint survival function
//   E(x, y) = m{ u > x, v > y },  x, y in [-inf, inf],
// where a negative argument drops the constraint on that coordinate (and so
// includes the axis). E is only called where the set is bounded away from
// the origin within the cone; E(inf, .) = E(., inf) = 0 is handled here so
// implementations never see infinite arguments.
class TailMeasure {
 public:
  using Survival = std::function<double(double, double)>;

  TailMeasure(ConeId cone, Survival survival, Scaling scaling,
              std::optional<double> hom_order, std::string label);

  ConeId cone() const noexcept { return cone_; }
  Scaling scaling() const noexcept { return scaling_; }
  std::optional<double> hom_order() const noexcept { return hom_order_; }
  const std::string& label() const noexcept { return label_; }

  // m{u > x, v > y}; throws PreconditionError outside the cone's domain.
  double survival(double x, double y) const;
  double eval(const Box& b) const;
  // Throws PreconditionError when r is not relatively compact in the cone.
  double eval(const ConeRect& r) const;

  // Whether (x, y) is a legal corner for survival() on this cone.
  bool corner_ok(double x, double y) const noexcept;

 private:
  ConeId cone_;
  Survival survival_;
  Scaling scaling_;
  std::optional<double> hom_order_;
  std::string label_;
};

double eval(const TailMeasure& m, const ConeRect& r);

}  // namespace extremal
