#include "gfem/subcells.hpp"

namespace gfem {

double SubcellMesh::total_area() const {
  double a = 0.0;
  for (const auto& c : cells) a += c.area();
  return a;
}

SubcellMesh build_subcell_mesh(const PatchGrid& grid) {
  const auto bx = grid.axis_breakpoints(0);
  const auto by = grid.axis_breakpoints(1);
  const DomainSpec& domain = grid.domain();

  SubcellMesh mesh;
  mesh.cells.reserve((bx.size() - 1) * (by.size() - 1));
  for (size_t iy = 0; iy + 1 < by.size(); ++iy) {
    for (size_t ix = 0; ix + 1 < bx.size(); ++ix) {
      Rect c{bx[ix], by[iy], bx[ix + 1], by[iy + 1]};
      if (domain.contains(c.center())) mesh.cells.push_back(c);
    }
  }
  return mesh;
}

}  // namespace gfem
