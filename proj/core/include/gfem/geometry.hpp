#ifndef GFEM_GEOMETRY_HPP
#define GFEM_GEOMETRY_HPP

#include <vector>

namespace gfem {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct Rect {
  double xmin = 0.0, ymin = 0.0, xmax = 0.0, ymax = 0.0;

  double width() const { return xmax - xmin; }
  double height() const { return ymax - ymin; }
  double area() const { return width() * height(); }
  Point center() const { return {0.5 * (xmin + xmax), 0.5 * (ymin + ymax)}; }
  bool contains(Point p) const {
    return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
  }
  bool intersects(const Rect& o) const {
    return xmin <= o.xmax && o.xmin <= xmax && ymin <= o.ymax && o.ymin <= ymax;
  }
  Rect expanded(double gx, double gy) const {
    return {xmin - gx, ymin - gy, xmax + gx, ymax + gy};
  }
};

/// Axis-aligned segment of the domain boundary: {axis, coord} is the line
/// (axis==0: x = coord, axis==1: y = coord), [lo, hi] the extent along it.
struct BoundarySegment {
  int axis;
  double coord;
  double lo, hi;
};

/// Computational domains. Rectangle is (a,b) x (c,d); LShape(a) is
/// (-a,a)^2 \ [0,a]^2 with the reentrant corner at the origin.
class DomainSpec {
 public:
  enum class Kind { Rectangle, LShape };

  static DomainSpec rectangle(double a, double b, double c, double d);
  static DomainSpec lshape(double a);

  Kind kind() const { return kind_; }
  Rect bounding_box() const { return box_; }
  double area() const;

  /// p in the closure of the domain.
  bool contains(Point p) const;
  /// p in the open domain and farther than tol from the boundary.
  bool strictly_inside(Point p, double tol) const;
  bool on_boundary(Point p, double tol) const;

  std::vector<BoundarySegment> boundary_segments() const;
  /// Interior boundary lines crossing the bounding box (the reentrant edges'
  /// coordinate 0 for the L-shape); used to split integration cells.
  std::vector<double> interior_cuts(int axis) const;

 private:
  DomainSpec(Kind k, Rect box) : kind_(k), box_(box) {}
  Kind kind_;
  Rect box_;
};

bool segment_intersects(const BoundarySegment& s, const Rect& r);

}  // namespace gfem

#endif
