#ifndef GFEM_INTERPOLATE_HPP
#define GFEM_INTERPOLATE_HPP

#include <Eigen/Core>

#include <array>
#include <functional>
#include <vector>

#include "gfem/smooth_function.hpp"
#include "gfem/space.hpp"

namespace gfem {

/// L2 projection of fn onto polynomials of the given degree on [-1,1],
/// returned as monomial coefficients. Uses a fixed 10-point Gauss rule
/// (exact through degree 19), so the projection is exact whenever fn is a
/// polynomial of degree <= 16.
std::vector<double> edge_projection(const std::function<double(double)>& fn, int degree);
std::array<double, 3> edge_projection_quadratic(const std::function<double(double)>& fn);

/// Patchwise interpolation onto the space: point values at the value nodes,
/// edge L2 projections feeding the derivative data on boundary sides, and the
/// averaged corner rule for the boundary mixed derivative. The result depends
/// only on zeta restricted to the closed domain.
Eigen::VectorXd interpolate(const GfemSpace& space, const SmoothFunction& zeta);

/// Coefficients of the interpolant restricted to the boundary degrees of
/// freedom; fixing these enforces the clamped trace of the boundary datum.
/// Sorted by dof id.
std::vector<std::pair<int, double>> boundary_coefficients(const GfemSpace& space,
                                                          const SmoothFunction& g);

}  // namespace gfem

#endif
