#ifndef GFEM_SMOOTH_FUNCTION_HPP
#define GFEM_SMOOTH_FUNCTION_HPP

#include <array>
#include <functional>

#include "gfem/geometry.hpp"

namespace gfem {

/// Scalar field with analytic gradient and, optionally, second derivatives.
/// Plays the role of extensions zeta, exact solutions, obstacles and
/// boundary data; all evaluations happen on the closed domain.
class SmoothFunction {
 public:
  using ValueFn = std::function<double(Point)>;
  using GradFn = std::function<std::array<double, 2>(Point)>;
  using HessFn = std::function<std::array<double, 3>(Point)>;  // dxx, dxy, dyy

  SmoothFunction() : SmoothFunction(zero()) {}
  SmoothFunction(ValueFn v, GradFn g) : value_(std::move(v)), grad_(std::move(g)) {}
  SmoothFunction(ValueFn v, GradFn g, HessFn h)
      : value_(std::move(v)), grad_(std::move(g)), hess_(std::move(h)) {}

  static SmoothFunction zero();
  static SmoothFunction constant(double c);
  /// Bivariate polynomial sum c[k][l] x^k y^l given as row-major (n x n).
  static SmoothFunction polynomial(std::vector<double> coeffs, int n);

  bool has_hessian() const { return static_cast<bool>(hess_); }
  double value(Point p) const { return value_(p); }
  std::array<double, 2> gradient(Point p) const { return grad_(p); }
  std::array<double, 3> hessian(Point p) const { return hess_(p); }

  /// Mixed partial derivative, d1 + d2 <= 2.
  double derivative(Point p, int d1, int d2) const;

 private:
  ValueFn value_;
  GradFn grad_;
  HessFn hess_;
};

}  // namespace gfem

#endif
