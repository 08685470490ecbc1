#include "extremal/measure.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "extremal/errors.hpp"

namespace extremal {

TailMeasure::TailMeasure(ConeId cone, Survival survival, Scaling scaling,
                         std::optional<double> hom_order, std::string label)
    : cone_(cone),
      survival_(std::move(survival)),
      scaling_(scaling),
      hom_order_(hom_order),
      label_(std::move(label)) {
  if (!survival_) throw PreconditionError("TailMeasure: empty survival function");
}

bool TailMeasure::corner_ok(double x, double y) const noexcept {
  switch (cone_) {
    case ConeId::Full: return std::max(x, y) > 0.0;
    case ConeId::Interior: return x > 0.0 && y > 0.0;
    case ConeId::UpperStrip: return y > 0.0;
    case ConeId::RightStrip: return x > 0.0;
  }
  return false;
}

double TailMeasure::survival(double x, double y) const {
  if (std::isnan(x) || std::isnan(y)) throw PreconditionError("survival: NaN argument");
  if (x == std::numeric_limits<double>::infinity() || y == std::numeric_limits<double>::infinity()) return 0.0;
  if (!corner_ok(x, y))
    throw PreconditionError(label_ + ": set {u > " + std::to_string(x) + ", v > " +
                            std::to_string(y) + "} is not bounded away from the origin in " +
                            to_string(cone_));
  return survival_(x, y);
}

double TailMeasure::eval(const Box& b) const {
  if (b.empty()) return 0.0;
  double v = survival(b.xl, b.yl) - survival(b.xh, b.yl) - survival(b.xl, b.yh) +
             survival(b.xh, b.yh);
  // Differences of survival values leave roundoff of either sign.
  if (v < 0.0 && v > -1e-9 * (1.0 + std::abs(survival(b.xl, b.yl)))) v = 0.0;
  return v;
}

double TailMeasure::eval(const ConeRect& r) const {
  if (!rect_in_cone(r, cone_))
    throw PreconditionError(r.describe() + " is not relatively compact in cone " +
                            to_string(cone_));
  double total = 0.0;
  for (const Box& b : boxes_of(r)) total += eval(b);
  return total;
}

double eval(const TailMeasure& m, const ConeRect& r) { return m.eval(r); }

}  // namespace extremal
