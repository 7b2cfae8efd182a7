#include "gfem/dof_table.hpp"

namespace gfem {

namespace {

// Boundary membership from the reference description: axes with a boundary
// condition are oriented so xi = -1 lies on the boundary; the L element's
// boundary is the pair of reentrant arms xi1 = 0 (xi2 >= 0) and xi2 = 0
// (xi1 >= 0).
bool node_on_boundary(const PatchClass& cls, const NodalFunctional& nf) {
  if (cls.l_element) {
    return (nf.xi1 == 0.0 && nf.xi2 >= 0.0) || (nf.xi2 == 0.0 && nf.xi1 >= 0.0);
  }
  if (cls.bc1 != AxisBc::None && nf.xi1 == -1.0) return true;
  if (cls.bc2 != AxisBc::None && nf.xi2 == -1.0) return true;
  return false;
}

}  // namespace

DofTable enumerate_dofs(const PatchGrid& grid, const std::vector<PatchClass>& classes,
                        const std::vector<const ReferenceElement*>& elements,
                        const std::vector<FlatTopMap>& maps) {
  DofTable t;
  t.offsets_.assign(static_cast<size_t>(grid.patch_count()), -1);
  for (int j : grid.alive()) {
    const auto& cls = classes[static_cast<size_t>(j)];
    const ReferenceElement& elem = *elements[static_cast<size_t>(j)];
    const FlatTopMap& map = maps[static_cast<size_t>(j)];
    t.offsets_[static_cast<size_t>(j)] = t.size();
    for (int i = 0; i < elem.size(); ++i) {
      const NodalFunctional& nf = elem.functional(i);
      Dof d;
      d.patch = j;
      d.local = i;
      d.node = map.to_physical(nf.xi1, nf.xi2);
      d.kind = nf.kind;
      d.on_boundary = node_on_boundary(cls, nf);
      d.pointwise = nf.kind == DofKind::Value;
      const int gid = t.size();
      if (d.on_boundary) t.boundary_.push_back(gid);
      if (d.pointwise && !d.on_boundary) t.interior_value_.push_back(gid);
      t.dofs_.push_back(d);
    }
  }
  return t;
}

}  // namespace gfem
