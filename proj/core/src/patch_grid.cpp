#include "gfem/patch_grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gfem {

PatchGrid PatchGrid::build(const DomainSpec& domain, int level, FlatTopParams params) {
  params.validate();
  if (level < 1) throw std::invalid_argument("PatchGrid::build: level must be >= 1");

  PatchGrid g;
  g.domain_ = domain;
  g.params_ = params;
  g.level_ = level;

  const Rect bb = domain.bounding_box();
  const int m = (domain.kind() == DomainSpec::Kind::LShape) ? (1 << level) + 1
                                                            : (1 << level);
  g.nx_ = g.ny_ = m;
  g.hx_ = bb.width() / (m - params.delta1);
  g.hy_ = bb.height() / (m - params.delta2);
  const double gx = 0.5 * params.delta1 * g.hx_;
  const double gy = 0.5 * params.delta2 * g.hy_;
  g.origin_x_ = bb.xmin - gx;
  g.origin_y_ = bb.ymin - gy;

  const int mid = (m - 1) / 2;
  g.patches_.reserve(static_cast<size_t>(m) * m);
  for (int iy = 0; iy < m; ++iy) {
    for (int ix = 0; ix < m; ++ix) {
      Patch p;
      p.ix = ix;
      p.iy = iy;
      p.cell = {g.origin_x_ + ix * g.hx_, g.origin_y_ + iy * g.hy_,
                g.origin_x_ + (ix + 1) * g.hx_, g.origin_y_ + (iy + 1) * g.hy_};
      p.center = p.cell.center();
      p.flat = p.cell.expanded(-gx, -gy);
      p.support = p.cell.expanded(gx, gy);
      if (domain.kind() == DomainSpec::Kind::LShape) {
        // Dead iff the support misses the closed domain, i.e. it lies inside
        // the removed quadrant.
        p.alive = !(p.support.xmin > 0.0 && p.support.ymin > 0.0);
        p.reentrant_center = (ix == mid && iy == mid);
      }
      if (p.alive) g.alive_.push_back(g.patch_id(ix, iy));
      g.patches_.push_back(p);
    }
  }
  return g;
}

double PatchGrid::pu_eval(int j, Point p, int dx, int dy) const {
  if (j < 0 || j >= patch_count())
    throw std::invalid_argument("pu_eval: patch index out of range");
  const Patch& q = patches_[static_cast<size_t>(j)];
  if (!q.alive) throw std::invalid_argument("pu_eval: dead patch");
  if (dx < 0 || dy < 0 || dx > 2 || dy > 2 || dx + dy > 2)
    throw std::invalid_argument("pu_eval: derivative order out of range");

  if (!q.support.contains(p)) return 0.0;
  const double sx = 2.0 / hx_;  // d(xi)/dx for the window argument
  const double sy = 2.0 / hy_;
  double v = window_1d((p.x - q.center.x) * sx, params_.delta1, dx) *
             window_1d((p.y - q.center.y) * sy, params_.delta2, dy);
  for (int k = 0; k < dx; ++k) v *= sx;
  for (int k = 0; k < dy; ++k) v *= sy;
  return v;
}

void PatchGrid::covering_patches(Point p, std::vector<int>& out) const {
  out.clear();
  const double rx = 0.5 * hx_ * (1.0 + params_.delta1);
  const double ry = 0.5 * hy_ * (1.0 + params_.delta2);

  int cand_x[2], cand_y[2];
  int ncx = 0, ncy = 0;
  const int bx = static_cast<int>(std::floor((p.x - origin_x_) / hx_));
  const int by = static_cast<int>(std::floor((p.y - origin_y_) / hy_));
  for (int ix = bx - 1; ix <= bx + 1; ++ix) {
    if (ix < 0 || ix >= nx_ || ncx == 2) continue;
    const double cx = origin_x_ + (ix + 0.5) * hx_;
    if (std::abs(p.x - cx) <= rx) cand_x[ncx++] = ix;
  }
  for (int iy = by - 1; iy <= by + 1; ++iy) {
    if (iy < 0 || iy >= ny_ || ncy == 2) continue;
    const double cy = origin_y_ + (iy + 0.5) * hy_;
    if (std::abs(p.y - cy) <= ry) cand_y[ncy++] = iy;
  }
  for (int a = 0; a < ncy; ++a)
    for (int b = 0; b < ncx; ++b) {
      const int id = patch_id(cand_x[b], cand_y[a]);
      if (patches_[static_cast<size_t>(id)].alive) out.push_back(id);
    }
}

std::vector<int> PatchGrid::covering_patches(Point p) const {
  std::vector<int> out;
  covering_patches(p, out);
  return out;
}

std::vector<double> PatchGrid::axis_breakpoints(int axis) const {
  if (axis != 0 && axis != 1) throw std::invalid_argument("axis_breakpoints: axis in {0,1}");
  const double h = axis == 0 ? hx_ : hy_;
  const double gamma = axis == 0 ? gamma_x() : gamma_y();
  const double origin = axis == 0 ? origin_x_ : origin_y_;
  const int m = axis == 0 ? nx_ : ny_;
  const Rect bb = domain_.bounding_box();
  const double lo = axis == 0 ? bb.xmin : bb.ymin;
  const double hi = axis == 0 ? bb.xmax : bb.ymax;

  std::vector<double> pts;
  pts.reserve(2 * static_cast<size_t>(m) + 3);
  for (int k = 0; k <= m; ++k) {
    pts.push_back(origin + k * h - gamma);
    pts.push_back(origin + k * h + gamma);
  }
  for (double c : domain_.interior_cuts(axis)) pts.push_back(c);
  pts.push_back(lo);
  pts.push_back(hi);

  std::sort(pts.begin(), pts.end());
  const double tol = 1e-12 * h;
  std::vector<double> out;
  for (double v : pts) {
    if (v < lo - tol || v > hi + tol) continue;
    if (out.empty() || v - out.back() > tol) out.push_back(v);
  }
  // snap the extremes exactly onto the domain edges
  out.front() = lo;
  out.back() = hi;
  return out;
}

}  // namespace gfem
