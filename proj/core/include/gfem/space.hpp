#ifndef GFEM_SPACE_HPP
#define GFEM_SPACE_HPP

#include <Eigen/Core>

#include <vector>

#include "gfem/dof_table.hpp"
#include "gfem/element.hpp"
#include "gfem/patch_grid.hpp"
#include "gfem/smooth_function.hpp"

namespace gfem {

/// Per-patch shape values and derivatives at a point, in the order
/// {v, d/dx, d/dy, d2/dx2, d2/dxdy, d2/dy2}.
struct LocalValues {
  int patch = -1;
  int count = 0;
  double phi[16][6];
};

/// The global approximation space: every alive patch carries a mapped
/// reference element multiplied by its flat-top window, and the union of the
/// patch-local coefficient blocks forms the coefficient vector.
class GfemSpace {
 public:
  static GfemSpace build(const DomainSpec& domain, int level, FlatTopParams params,
                         SpaceKind kind);

  const PatchGrid& grid() const { return grid_; }
  const DofTable& dofs() const { return dofs_; }
  SpaceKind space_kind() const { return kind_; }
  int dof_count() const { return dofs_.size(); }
  int level() const { return grid_.level(); }

  const PatchClass& patch_class(int j) const { return classes_[static_cast<size_t>(j)]; }
  const ReferenceElement& element(int j) const { return *elements_[static_cast<size_t>(j)]; }
  const FlatTopMap& map(int j) const { return maps_[static_cast<size_t>(j)]; }
  /// The L element's N8 fallback engaged (L-shaped domains only).
  bool l_element_n8_moved() const;

  /// Global basis function of one degree of freedom; zero outside the owning
  /// patch's support. d1 + d2 <= 2.
  double basis_eval(int dof, Point p, int d1, int d2) const;

  /// Field evaluation: sum over the covering patches only, so the cost is
  /// independent of the total number of degrees of freedom.
  double evaluate(const Eigen::VectorXd& coeffs, Point p, int d1, int d2) const;

  /// All shape data of patch j at p (false if p is outside the support).
  bool local_values(int j, Point p, LocalValues& out) const;

  /// Wrap a coefficient vector as a SmoothFunction (copies the vector).
  SmoothFunction field_function(Eigen::VectorXd coeffs) const;

 private:
  GfemSpace() = default;

  PatchGrid grid_;
  SpaceKind kind_ = SpaceKind::Q2;
  std::vector<PatchClass> classes_;
  std::vector<const ReferenceElement*> elements_;
  std::vector<FlatTopMap> maps_;
  DofTable dofs_;
};

}  // namespace gfem

#endif
