#pragma once

#include <vector>

#include "extremal/cones.hpp"
#include "extremal/measure.hpp"

namespace extremal {

struct ConsistencyReport {
  double max_defect = 0.0;
  ConeRect worst = ConeRect::joint(1.0, 1.0);
  bool pass = true;
  std::vector<double> defects;  // one per grid rect
};

// Compares two measures on JointExceed rects of the interior cone.
ConsistencyReport consistency_check(const TailMeasure& mu, const TailMeasure& nu,
                                    const std::vector<ConeRect>& grid, double tol);

// JointExceed rects on {0.5,1,2,4}^2.
std::vector<ConeRect> default_consistency_grid();

// mu(A n B1) + nu(A n B2) for mu on the upper strip and nu on the right strip.
// Checks eps < d(0,A)/sqrt(2) and runs consistency_check on the default grid
// with tolerance 1e-9; a failure raises
// InconsistentMeasures carrying the largest discrepancy.
double glue(const TailMeasure& mu, const TailMeasure& nu, const ConeRect& a, double eps);
double glue(const TailMeasure& mu, const TailMeasure& nu, const Box& a, double eps);

// The glued measure on the full cone, evaluated with eps = d(0,A)/2 per set.
TailMeasure glued_measure(const TailMeasure& mu, const TailMeasure& nu);

}  // namespace extremal
