#ifndef GFEM_DOF_TABLE_HPP
#define GFEM_DOF_TABLE_HPP

#include <vector>

#include "gfem/element.hpp"
#include "gfem/geometry.hpp"
#include "gfem/patch_grid.hpp"

namespace gfem {

struct Dof {
  int patch;   // owning patch id
  int local;   // local functional index within the patch's element
  Point node;  // physical node location
  DofKind kind;
  bool on_boundary;  // node lies on the domain boundary
  bool pointwise;    // kind == Value
};

/// Global numbering of the patch-owned degrees of freedom, patch-major over
/// alive patches. Basis functions are never shared between patches; every
/// global basis function vanishes at all nodes of foreign patches.
class DofTable {
 public:
  DofTable() = default;

  int size() const { return static_cast<int>(dofs_.size()); }
  const Dof& operator[](int i) const { return dofs_[static_cast<size_t>(i)]; }

  /// Global id of local functional 0 of a patch (-1 for dead patches).
  int patch_offset(int j) const { return offsets_[static_cast<size_t>(j)]; }
  int id(int patch, int local) const { return patch_offset(patch) + local; }

  /// Pointwise-evaluation nodes in the open domain: the constraint set.
  const std::vector<int>& interior_value_dofs() const { return interior_value_; }
  const std::vector<int>& boundary_dofs() const { return boundary_; }

  friend DofTable enumerate_dofs(const PatchGrid& grid,
                                 const std::vector<PatchClass>& classes,
                                 const std::vector<const ReferenceElement*>& elements,
                                 const std::vector<FlatTopMap>& maps);

 private:
  std::vector<Dof> dofs_;
  std::vector<int> offsets_;
  std::vector<int> interior_value_;
  std::vector<int> boundary_;
};

DofTable enumerate_dofs(const PatchGrid& grid, const std::vector<PatchClass>& classes,
                        const std::vector<const ReferenceElement*>& elements,
                        const std::vector<FlatTopMap>& maps);

}  // namespace gfem

#endif
