#ifndef GFEM_PATCH_GRID_HPP
#define GFEM_PATCH_GRID_HPP

#include <array>
#include <vector>

#include "gfem/geometry.hpp"
#include "gfem/window.hpp"

namespace gfem {

struct Patch {
  Point center;
  Rect cell;      // the tiling rectangle Q_j
  Rect flat;      // flat-top core, cell shrunk by (gamma1, gamma2)
  Rect support;   // support of the window product, cell expanded by (gamma1, gamma2)
  int ix = 0, iy = 0;
  bool alive = true;             // support meets the closed domain
  bool reentrant_center = false; // center sits on the reentrant corner (L domain)

  /// Polynomial breakpoints of the 1-D window along each axis
  /// (support edge, flat edge, flat edge, support edge).
  std::array<double, 4> breakpoints_x() const {
    return {support.xmin, flat.xmin, flat.xmax, support.xmax};
  }
  std::array<double, 4> breakpoints_y() const {
    return {support.ymin, flat.ymin, flat.ymax, support.ymax};
  }
};

/// Uniform rectangular patch cover of the expanded domain together with the
/// flat-top partition of unity (products of two 1-D windows per patch).
///
/// The expanded domain adds a margin gamma_i = delta_i * h_i / 2 on each side,
/// so the flat-top edges of boundary patches land exactly on the domain
/// boundary. A rectangle at level j gets 2^j patches per direction
/// (h = L / (2^j - delta)); the L-shape gets 2^j + 1 so that the middle
/// patch center coincides with the reentrant corner.
class PatchGrid {
 public:
  static PatchGrid build(const DomainSpec& domain, int level, FlatTopParams params);

  const DomainSpec& domain() const { return domain_; }
  int level() const { return level_; }
  int nx() const { return nx_; }
  int ny() const { return ny_; }
  double hx() const { return hx_; }
  double hy() const { return hy_; }
  double gamma_x() const { return 0.5 * params_.delta1 * hx_; }
  double gamma_y() const { return 0.5 * params_.delta2 * hy_; }
  const FlatTopParams& params() const { return params_; }

  int patch_count() const { return static_cast<int>(patches_.size()); }
  const Patch& patch(int j) const { return patches_[static_cast<size_t>(j)]; }
  const std::vector<int>& alive() const { return alive_; }
  int alive_count() const { return static_cast<int>(alive_.size()); }
  int patch_id(int ix, int iy) const { return iy * nx_ + ix; }

  /// d^dx/dx1 d^dy/dx2 of the window product Psi_j at p (dx + dy <= 2).
  double pu_eval(int j, Point p, int dx, int dy) const;

  /// Alive patches whose (closed) support contains p; empty outside the
  /// expanded domain. At most 2 per direction.
  std::vector<int> covering_patches(Point p) const;
  void covering_patches(Point p, std::vector<int>& out) const;

  /// Sorted union of all window breakpoints along an axis, extended by the
  /// domain's interior cuts and clipped to the domain extent.
  std::vector<double> axis_breakpoints(int axis) const;

  PatchGrid() : domain_(DomainSpec::rectangle(0, 1, 0, 1)) {}

 private:
  DomainSpec domain_;
  FlatTopParams params_;
  int level_ = 0;
  int nx_ = 0, ny_ = 0;
  double hx_ = 0, hy_ = 0;
  double origin_x_ = 0, origin_y_ = 0;  // lower-left corner of the expanded domain
  std::vector<Patch> patches_;
  std::vector<int> alive_;
};

}  // namespace gfem

#endif
