#include "gfem/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace gfem {

DomainSpec DomainSpec::rectangle(double a, double b, double c, double d) {
  if (!(a < b) || !(c < d))
    throw std::invalid_argument("DomainSpec::rectangle: requires a < b and c < d");
  return DomainSpec(Kind::Rectangle, Rect{a, c, b, d});
}

DomainSpec DomainSpec::lshape(double a) {
  if (!(a > 0.0)) throw std::invalid_argument("DomainSpec::lshape: requires a > 0");
  return DomainSpec(Kind::LShape, Rect{-a, -a, a, a});
}

double DomainSpec::area() const {
  if (kind_ == Kind::Rectangle) return box_.area();
  const double a = box_.xmax;
  return 3.0 * a * a;
}

bool DomainSpec::contains(Point p) const {
  if (!box_.contains(p)) return false;
  if (kind_ == Kind::LShape && p.x > 0.0 && p.y > 0.0) return false;
  return true;
}

bool DomainSpec::strictly_inside(Point p, double tol) const {
  Rect shrunk{box_.xmin + tol, box_.ymin + tol, box_.xmax - tol, box_.ymax - tol};
  if (!shrunk.contains(p)) return false;
  if (kind_ == Kind::LShape && p.x > -tol && p.y > -tol) return false;
  return true;
}

bool DomainSpec::on_boundary(Point p, double tol) const {
  for (const auto& s : boundary_segments()) {
    const double along = (s.axis == 0) ? p.y : p.x;
    const double across = (s.axis == 0) ? p.x : p.y;
    if (std::abs(across - s.coord) <= tol && along >= s.lo - tol && along <= s.hi + tol)
      return true;
  }
  return false;
}

std::vector<BoundarySegment> DomainSpec::boundary_segments() const {
  const Rect& b = box_;
  if (kind_ == Kind::Rectangle) {
    return {{0, b.xmin, b.ymin, b.ymax},
            {0, b.xmax, b.ymin, b.ymax},
            {1, b.ymin, b.xmin, b.xmax},
            {1, b.ymax, b.xmin, b.xmax}};
  }
  const double a = b.xmax;
  return {{0, -a, -a, a},        // left
          {1, -a, -a, a},        // bottom
          {0, a, -a, 0.0},       // right, below the removed quadrant
          {1, a, -a, 0.0},       // top, left of the removed quadrant
          {0, 0.0, 0.0, a},      // reentrant, vertical
          {1, 0.0, 0.0, a}};     // reentrant, horizontal
}

std::vector<double> DomainSpec::interior_cuts(int axis) const {
  (void)axis;
  if (kind_ == Kind::LShape) return {0.0};
  return {};
}

bool segment_intersects(const BoundarySegment& s, const Rect& r) {
  if (s.axis == 0) {
    return s.coord >= r.xmin && s.coord <= r.xmax && s.lo <= r.ymax && s.hi >= r.ymin;
  }
  return s.coord >= r.ymin && s.coord <= r.ymax && s.lo <= r.xmax && s.hi >= r.xmin;
}

}  // namespace gfem
