#include "gfem/constraints.hpp"

#include <limits>
#include <sstream>

#include "gfem/errors.hpp"
#include "gfem/interpolate.hpp"

namespace gfem {

BoxConstraints build_constraints(const GfemSpace& space, const SmoothFunction* psi1,
                                 const SmoothFunction* psi2, const SmoothFunction* g) {
  const double inf = std::numeric_limits<double>::infinity();
  BoxConstraints bc;
  if (psi1 || psi2) {
    bc.dofs = space.dofs().interior_value_dofs();
    const int n = bc.count();
    bc.lower.setConstant(n, -inf);
    bc.upper.setConstant(n, inf);
    for (int k = 0; k < n; ++k) {
      const Point p = space.dofs()[bc.dofs[static_cast<size_t>(k)]].node;
      if (psi1) bc.lower[k] = psi1->value(p);
      if (psi2) bc.upper[k] = psi2->value(p);
      if (bc.lower[k] >= bc.upper[k]) {
        std::ostringstream os;
        os << "build_constraints: obstacles cross at node (" << p.x << ", " << p.y
           << "): psi1 = " << bc.lower[k] << " >= psi2 = " << bc.upper[k];
        throw data_error(os.str());
      }
    }
  }
  if (g) {
    bc.fixed = boundary_coefficients(space, *g);
  } else {
    bc.fixed.reserve(space.dofs().boundary_dofs().size());
    for (int id : space.dofs().boundary_dofs()) bc.fixed.emplace_back(id, 0.0);
  }
  return bc;
}

}  // namespace gfem
