#ifndef GFEM_SUBCELLS_HPP
#define GFEM_SUBCELLS_HPP

#include <vector>

#include "gfem/geometry.hpp"
#include "gfem/patch_grid.hpp"

namespace gfem {

/// Axis-aligned integration cells covering the domain. Within each cell every
/// window function is a single polynomial piece (the cell edges are the
/// window breakpoints intersected with the domain), so tensor Gauss rules
/// integrate the assembled forms exactly.
struct SubcellMesh {
  std::vector<Rect> cells;
  double total_area() const;
};

SubcellMesh build_subcell_mesh(const PatchGrid& grid);

}  // namespace gfem

#endif
