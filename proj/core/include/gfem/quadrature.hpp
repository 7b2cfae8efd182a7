#ifndef GFEM_QUADRATURE_HPP
#define GFEM_QUADRATURE_HPP

#include <vector>

namespace gfem {

/// Gauss-Legendre rule on [-1,1]; exact for polynomials of degree <= 2n-1.
struct GaussRule {
  int order = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached rule of the given order, 1 <= n <= 20. Nodes are Newton-refined
/// to ~1e-15.
const GaussRule& gauss_rule(int n);

}  // namespace gfem

#endif
