#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>

#include "extremal/angular.hpp"
#include "extremal/distribution.hpp"

namespace extremal {

// X, Z iid Pareto(1), Y = min(X^2, Z^2). interior_alpha picks the interior
// cone scaling (alpha, 2(1 - alpha)), alpha in (1/2, 1).
struct Ex51 {
  double interior_alpha = 0.75;
};
// X ~ Pareto(rho), Z ~ Pareto(1 - rho), Y = min(X, Z), 0 < rho < 1.
struct Ex52 {
  double rho = 0.5;
};
// (R xi, R) with R Pareto(1) independent of xi ~ G on [0, inf).
struct Ex53 {
  Distribution g;
};
// (R0 Theta0, R0 (1 - Theta0)) with Theta0 ~ S / |S| and R0 = |S| * Pareto(1).
struct FromAngular {
  std::shared_ptr<const AngularMeasure> s;
};
// X ~ H independent of Y* ~ Pareto(1).
struct ProductLimit {
  Distribution h;
};
// X ~ Pareto(1), pair (X, X).
struct DiagonalPareto {};

using ModelVariant = std::variant<Ex51, Ex52, Ex53, FromAngular, ProductLimit, DiagonalPareto>;

struct ModelSpec {
  ModelVariant variant;
  std::uint64_t seed = 0;

  std::string name() const;
};

// Validating constructors.
ModelSpec make_ex51(std::uint64_t seed, double interior_alpha = 0.75);
ModelSpec make_ex52(double rho, std::uint64_t seed);
ModelSpec make_ex53(Distribution g, std::uint64_t seed);
ModelSpec make_from_angular(AngularMeasure s, std::uint64_t seed);
ModelSpec make_product_limit(Distribution h, std::uint64_t seed);
ModelSpec make_diagonal(std::uint64_t seed);

}  // namespace extremal
