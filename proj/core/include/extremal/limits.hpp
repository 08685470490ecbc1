#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "extremal/batch.hpp"
#include "extremal/measure.hpp"
#include "extremal/model.hpp"
#include "extremal/numeric.hpp"

namespace extremal {

// Natural: the model's raw coordinates with the cone's own scaling.
// Standard: margins transformed so that both scale by t (hom order 1):
//   Ex51 upper (X^2, Y), right (X, sqrt Y), interior (X^{1/a}, Y^{1/(2(1-a))});
//   Ex52 upper (X, Y) with the natural form being the CEVM pair (X^rho, Y);
//   ProductLimit upper (X Y*, Y*).
enum class Form { Natural, Standard };

// Catalog entries:
//   Ex51          Full, Interior, UpperStrip, RightStrip (RightStrip as stated
//                 in the literature, see README)
//   Ex52          UpperStrip
//   Ex53          UpperStrip
//   FromAngular   UpperStrip, Full (finite S), RightStrip, Interior
//   ProductLimit  UpperStrip
//   Diagonal      all four
// Anything else raises CatalogMiss.
TailMeasure make_measure(const ModelSpec& model, ConeId cone, Form form = Form::Natural);

// Coordinate maps taking raw draws to the pair the catalog measure describes
// (before the t^p, t^q scaling). Identity unless noted next to Form.
using DataMap = std::function<Point(double, double)>;
DataMap prelimit_map(const ModelSpec& model, ConeId cone, Form form = Form::Natural);
SampleBatch apply_map(const DataMap& map, const SampleBatch& b);

// |eval(scale(c, r)) - c^{-alpha} eval(r)|; PreconditionError without a
// homogeneity order.
double check_homogeneity(const TailMeasure& m, double c, const ConeRect& r);

struct ProductTestResult {
  bool is_product = false;
  double defect = 0.0;           // max |m(x,y)m(x',y') - m(x,y')m(x',y)|
  double relative_defect = 0.0;  // defect / max |m(x,y)m(x',y')|
};

// UpperRect values on xs x ys; product iff relative_defect <= rel_tol.
ProductTestResult product_test(const TailMeasure& m, const std::vector<double>& xs,
                               const std::vector<double>& ys, double rel_tol = 1e-6);
ProductTestResult product_test(const TailMeasure& m);  // default 4x4 grid

struct ConditionalLaw {
  RealFn cdf;
};

// x -> m(UpperRect(x,1)) / m(UpperRect(inf,1)).
ConditionalLaw conditional_H(const TailMeasure& m);

}  // namespace extremal
