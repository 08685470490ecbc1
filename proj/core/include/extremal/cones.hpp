#pragma once

#include <string>
#include <vector>

namespace extremal {

// Cones of the closed quadrant [0, inf]^2.
//   Full        quadrant without the origin
//   Interior    (0, inf]^2
//   UpperStrip  [0, inf] x (0, inf]   (horizontal axis removed)
//   RightStrip  (0, inf] x [0, inf]   (vertical axis removed)
enum class ConeId { Full, Interior, UpperStrip, RightStrip };

std::string to_string(ConeId cone);
ConeId cone_from_string(const std::string& name);  // full|interior|upper|right

struct Point {
  double x = 0.0;
  double y = 0.0;
};

bool contains(ConeId cone, Point p);

enum class RectKind { UpperRect, RightRect, JointExceed, ComplRect };

std::string to_string(RectKind kind);

// Canonical sets on which measures are evaluated:
//   UpperRect(x,y)   = [0,x] x (y,inf]
//   RightRect(x,y)   = (x,inf] x [0,y]
//   JointExceed(x,y) = (x,inf] x (y,inf]
//   ComplRect(x,y)   = ([0,x] x [0,y])^c
class ConeRect {
 public:
  static ConeRect upper(double x, double y);
  static ConeRect right(double x, double y);
  static ConeRect joint(double x, double y);
  static ConeRect compl_rect(double x, double y);
  static ConeRect make(RectKind kind, double x, double y);

  RectKind kind() const noexcept { return kind_; }
  double x() const noexcept { return x_; }
  double y() const noexcept { return y_; }

  bool contains(Point p) const noexcept;
  std::string describe() const;

 private:
  ConeRect(RectKind kind, double x, double y) : kind_(kind), x_(x), y_(y) {}
  RectKind kind_;
  double x_;
  double y_;
};

ConeRect scale(double c, const ConeRect& r);

// Euclidean distance from the origin to the closure of r. Throws
// PreconditionError when that distance is zero (ComplRect with a zero side).
double rect_distance_to_origin(const ConeRect& r);

// True when r is relatively compact in the cone, i.e. a legal argument of a
// measure living on that cone.
bool rect_in_cone(const ConeRect& r, ConeId cone);

// Half-open box {xl < u <= xh, yl < v <= yh} inside the quadrant. A lower
// bound of -inf means the axis is included; an upper bound of +inf means the
// box is unbounded (the point at infinity is included).
struct Box {
  double xl;
  double xh;
  double yl;
  double yh;

  bool empty() const noexcept { return !(xl < xh) || !(yl < yh); }
  bool contains(Point p) const noexcept;
  double distance_to_origin() const noexcept;
};

Box intersect(const Box& a, const Box& b) noexcept;

// Disjoint box decomposition of a ConeRect (one box, two for ComplRect).
std::vector<Box> boxes_of(const ConeRect& r);

// The two bands used when gluing a measure on the upper strip to one on the
// right strip: B1 = [0,eps] x (eps,inf], B2 = (eps,inf] x [0,inf].
// Moving the band boundary onto the lines u = eps and v = eps changes nothing
// for homogeneous limits, which put no mass on lines away from the axes.
struct GluePartition {
  double epsilon;
  Box b1;
  Box b2;

  explicit GluePartition(double eps);
};

}  // namespace extremal
