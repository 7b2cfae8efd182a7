#ifndef GFEM_SHAPE1D_HPP
#define GFEM_SHAPE1D_HPP

#include <span>

namespace gfem {

/// 1-D shape function families on the reference interval [-1,1].
///
/// Lagrange2: nodes {-1, 0, 1}.
/// Hermite2:  functionals {v'(-1), v(-1), v(1)} (quadratics).
/// Lagrange3: nodes {-1, -1/3, 1/3, 1}.
/// Hermite3:  functionals {v'(-1), v(-1), v(1), v'(1)} (cubics).
enum class ShapeFamily { Lagrange2, Hermite2, Lagrange3, Hermite3 };

struct Functional1d {
  bool derivative;  // false: point value, true: first derivative
  double node;
};

int family_size(ShapeFamily f);
int family_degree(ShapeFamily f);
const Functional1d& family_functional(ShapeFamily f, int i);  // i in [0, size)

/// Monomial coefficients (c0 + c1 xi + ...) of shape i; dual to the family's
/// functionals: N_k(shape_i) = delta_ki.
std::span<const double> shape_coefficients(ShapeFamily f, int i);

/// Value (order 0) or derivative (order 1, 2) of shape i at xi.
double shape_1d(ShapeFamily f, int i, double xi, int order);

}  // namespace gfem

#endif
