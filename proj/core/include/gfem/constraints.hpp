#ifndef GFEM_CONSTRAINTS_HPP
#define GFEM_CONSTRAINTS_HPP

#include <Eigen/Core>

#include <vector>

#include "gfem/smooth_function.hpp"
#include "gfem/space.hpp"

namespace gfem {

/// Discrete constraint data: box bounds at the pointwise-evaluation nodes in
/// the open domain, plus boundary degrees of freedom pinned to the boundary
/// interpolant. Bounds are +-infinity where an obstacle is absent.
struct BoxConstraints {
  std::vector<int> dofs;   // constrained dof ids, ascending
  Eigen::VectorXd lower;   // psi1 at the nodes
  Eigen::VectorXd upper;   // psi2 at the nodes
  std::vector<std::pair<int, double>> fixed;  // boundary dof -> value, ascending

  int count() const { return static_cast<int>(dofs.size()); }
};

/// psi1/psi2/g may be null (one-sided or homogeneous problems). Throws
/// data_error naming the node if the obstacles are incompatible there.
BoxConstraints build_constraints(const GfemSpace& space, const SmoothFunction* psi1,
                                 const SmoothFunction* psi2, const SmoothFunction* g);

}  // namespace gfem

#endif
