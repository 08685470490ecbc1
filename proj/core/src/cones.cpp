#include "extremal/cones.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "extremal/errors.hpp"

namespace extremal {

std::string to_string(ConeId cone) {
  switch (cone) {
    case ConeId::Full: return "full";
    case ConeId::Interior: return "interior";
    case ConeId::UpperStrip: return "upper";
    case ConeId::RightStrip: return "right";
  }
  return "?";
}

ConeId cone_from_string(const std::string& name) {
  if (name == "full") return ConeId::Full;
  if (name == "interior") return ConeId::Interior;
  if (name == "upper") return ConeId::UpperStrip;
  if (name == "right") return ConeId::RightStrip;
  throw ConfigError("unknown cone '" + name + "' (full|interior|upper|right)");
}

bool contains(ConeId cone, Point p) {
  if (!(p.x >= 0.0) || !(p.y >= 0.0))
    throw PreconditionError("contains: coordinates must be nonnegative");
  switch (cone) {
    case ConeId::Full: return p.x > 0.0 || p.y > 0.0;
    case ConeId::Interior: return p.x > 0.0 && p.y > 0.0;
    case ConeId::UpperStrip: return p.y > 0.0;
    case ConeId::RightStrip: return p.x > 0.0;
  }
  return false;
}

std::string to_string(RectKind kind) {
  switch (kind) {
    case RectKind::UpperRect: return "upper_rect";
    case RectKind::RightRect: return "right_rect";
    case RectKind::JointExceed: return "joint_exceed";
    case RectKind::ComplRect: return "compl_rect";
  }
  return "?";
}

namespace {
void check_coords(double x, double y) {
  if (!(x >= 0.0) || !(y >= 0.0))
    throw PreconditionError("ConeRect: coordinates must be nonnegative and not NaN");
}
}  // namespace

ConeRect ConeRect::upper(double x, double y) {
  check_coords(x, y);
  if (!(y > 0.0) || std::isinf(y)) throw PreconditionError("UpperRect needs 0 < y < inf");
  return {RectKind::UpperRect, x, y};
}

ConeRect ConeRect::right(double x, double y) {
  check_coords(x, y);
  if (!(x > 0.0) || std::isinf(x)) throw PreconditionError("RightRect needs 0 < x < inf");
  return {RectKind::RightRect, x, y};
}

ConeRect ConeRect::joint(double x, double y) {
  check_coords(x, y);
  if (!(x > 0.0) || !(y > 0.0)) throw PreconditionError("JointExceed needs x, y > 0");
  return {RectKind::JointExceed, x, y};
}

ConeRect ConeRect::compl_rect(double x, double y) {
  check_coords(x, y);
  if (!(std::max(x, y) > 0.0)) throw PreconditionError("ComplRect needs max(x, y) > 0");
  return {RectKind::ComplRect, x, y};
}

ConeRect ConeRect::make(RectKind kind, double x, double y) {
  switch (kind) {
    case RectKind::UpperRect: return upper(x, y);
    case RectKind::RightRect: return right(x, y);
    case RectKind::JointExceed: return joint(x, y);
    case RectKind::ComplRect: return compl_rect(x, y);
  }
  throw PreconditionError("ConeRect: bad kind");
}

bool ConeRect::contains(Point p) const noexcept {
  switch (kind_) {
    case RectKind::UpperRect: return p.x <= x_ && p.y > y_;
    case RectKind::RightRect: return p.x > x_ && p.y <= y_;
    case RectKind::JointExceed: return p.x > x_ && p.y > y_;
    case RectKind::ComplRect: return p.x > x_ || p.y > y_;
  }
  return false;
}

std::string ConeRect::describe() const {
  std::ostringstream os;
  os << to_string(kind_) << "(" << x_ << "," << y_ << ")";
  return os.str();
}

ConeRect scale(double c, const ConeRect& r) {
  if (!(c > 0.0) || std::isinf(c)) throw PreconditionError("scale: need 0 < c < inf");
  return ConeRect::make(r.kind(), c * r.x(), c * r.y());
}

double rect_distance_to_origin(const ConeRect& r) {
  switch (r.kind()) {
    case RectKind::UpperRect: return r.y();
    case RectKind::RightRect: return r.x();
    case RectKind::JointExceed: return std::hypot(r.x(), r.y());
    case RectKind::ComplRect: {
      double d = std::min(r.x(), r.y());
      if (!(d > 0.0))
        throw PreconditionError("ComplRect " + r.describe() + " touches the origin");
      return d;
    }
  }
  return 0.0;
}

bool rect_in_cone(const ConeRect& r, ConeId cone) {
  switch (r.kind()) {
    case RectKind::UpperRect: return cone == ConeId::Full || cone == ConeId::UpperStrip;
    case RectKind::RightRect: return cone == ConeId::Full || cone == ConeId::RightStrip;
    case RectKind::JointExceed: return true;
    case RectKind::ComplRect: return cone == ConeId::Full && std::min(r.x(), r.y()) > 0.0;
  }
  return false;
}

bool Box::contains(Point p) const noexcept {
  return xl < p.x && p.x <= xh && yl < p.y && p.y <= yh;
}

double Box::distance_to_origin() const noexcept {
  return std::hypot(std::max(xl, 0.0), std::max(yl, 0.0));
}

Box intersect(const Box& a, const Box& b) noexcept {
  return {std::max(a.xl, b.xl), std::min(a.xh, b.xh), std::max(a.yl, b.yl),
          std::min(a.yh, b.yh)};
}

std::vector<Box> boxes_of(const ConeRect& r) {
  const double x = r.x(), y = r.y();
  constexpr double inf = std::numeric_limits<double>::infinity();
  switch (r.kind()) {
    case RectKind::UpperRect: return {{-inf, x, y, inf}};
    case RectKind::RightRect: return {{x, inf, -inf, y}};
    case RectKind::JointExceed: return {{x, inf, y, inf}};
    case RectKind::ComplRect: return {{-inf, x, y, inf}, {x, inf, -inf, inf}};
  }
  return {};
}

GluePartition::GluePartition(double eps)
    : epsilon(eps),
      b1{-std::numeric_limits<double>::infinity(), eps, eps,
         std::numeric_limits<double>::infinity()},
      b2{eps, std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
         std::numeric_limits<double>::infinity()} {
  if (!(eps > 0.0) || std::isinf(eps)) throw PreconditionError("GluePartition: need 0 < eps < inf");
}

}  // namespace extremal
