#include "extremal/glue.hpp"

#include <cmath>
#include <limits>

#include "extremal/errors.hpp"

namespace extremal {

namespace {

constexpr double kGlueConsistencyTol = 1e-9;

void check_cones(const TailMeasure& mu, const TailMeasure& nu) {
  if (mu.cone() != ConeId::UpperStrip)
    throw PreconditionError("glue: mu must live on the upper strip, got " + to_string(mu.cone()));
  if (nu.cone() != ConeId::RightStrip)
    throw PreconditionError("glue: nu must live on the right strip, got " + to_string(nu.cone()));
}

void require_consistent(const TailMeasure& mu, const TailMeasure& nu) {
  ConsistencyReport rep = consistency_check(mu, nu, default_consistency_grid(), kGlueConsistencyTol);
  if (!rep.pass)
    throw InconsistentMeasures("glue: " + mu.label() + " and " + nu.label() +
                                   " disagree on the interior cone, max discrepancy " +
                                   std::to_string(rep.max_defect) + " at " + rep.worst.describe(),
                               rep.max_defect);
}

double glue_box(const TailMeasure& mu, const TailMeasure& nu, const Box& a, double eps) {
  GluePartition part(eps);
  return mu.eval(intersect(a, part.b1)) + nu.eval(intersect(a, part.b2));
}

void check_eps(double eps, double distance) {
  if (!(eps > 0.0)) throw PreconditionError("glue: eps must be positive");
  if (!(eps < distance / std::sqrt(2.0)))
    throw PreconditionError("glue: eps = " + std::to_string(eps) +
                            " is not below d(0,A)/sqrt(2) = " +
                            std::to_string(distance / std::sqrt(2.0)));
}

}  // namespace

ConsistencyReport consistency_check(const TailMeasure& mu, const TailMeasure& nu,
                                    const std::vector<ConeRect>& grid, double tol) {
  ConsistencyReport rep;
  for (const ConeRect& r : grid) {
    double d = std::abs(mu.eval(r) - nu.eval(r));
    rep.defects.push_back(d);
    if (rep.defects.size() == 1 || d > rep.max_defect) {
      rep.max_defect = d;
      rep.worst = r;
    }
  }
  rep.pass = rep.max_defect <= tol;
  return rep;
}

std::vector<ConeRect> default_consistency_grid() {
  std::vector<ConeRect> grid;
  for (double x : {0.5, 1.0, 2.0, 4.0})
    for (double y : {0.5, 1.0, 2.0, 4.0}) grid.push_back(ConeRect::joint(x, y));
  return grid;
}

double glue(const TailMeasure& mu, const TailMeasure& nu, const Box& a, double eps) {
  check_cones(mu, nu);
  check_eps(eps, a.distance_to_origin());
  require_consistent(mu, nu);
  return glue_box(mu, nu, a, eps);
}

double glue(const TailMeasure& mu, const TailMeasure& nu, const ConeRect& a, double eps) {
  check_cones(mu, nu);
  if (!rect_in_cone(a, ConeId::Full))
    throw PreconditionError("glue: " + a.describe() + " is not relatively compact in the full cone");
  check_eps(eps, rect_distance_to_origin(a));
  require_consistent(mu, nu);
  double total = 0.0;
  for (const Box& b : boxes_of(a)) total += glue_box(mu, nu, b, eps);
  return total;
}

TailMeasure glued_measure(const TailMeasure& mu, const TailMeasure& nu) {
  check_cones(mu, nu);
  require_consistent(mu, nu);
  auto survival = [mu, nu](double x, double y) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    Box a{x, inf, y, inf};
    return glue_box(mu, nu, a, 0.5 * a.distance_to_origin());
  };
  std::optional<double> order;
  if (mu.hom_order() && nu.hom_order() && *mu.hom_order() == *nu.hom_order())
    order = mu.hom_order();
  return TailMeasure(ConeId::Full, survival, mu.scaling(), order,
                     "glue(" + mu.label() + "," + nu.label() + ")");
}

}  // namespace extremal
