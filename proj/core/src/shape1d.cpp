#include "gfem/shape1d.hpp"

#include <stdexcept>

namespace gfem {

namespace {

constexpr double kLagrange2[3][3] = {
    {0.0, -0.5, 0.5},   // xi(xi-1)/2
    {1.0, 0.0, -1.0},   // 1 - xi^2
    {0.0, 0.5, 0.5},    // xi(xi+1)/2
};
constexpr Functional1d kLagrange2F[3] = {{false, -1.0}, {false, 0.0}, {false, 1.0}};

constexpr double kHermite2[3][3] = {
    {0.5, 0.0, -0.5},     // (1-xi^2)/2        dual to v'(-1)
    {0.75, -0.5, -0.25},  //                   dual to v(-1)
    {0.25, 0.5, 0.25},    // (1+xi)^2/4        dual to v(1)
};
constexpr Functional1d kHermite2F[3] = {{true, -1.0}, {false, -1.0}, {false, 1.0}};

constexpr double kLagrange3[4][4] = {
    {-1.0 / 16, 1.0 / 16, 9.0 / 16, -9.0 / 16},
    {9.0 / 16, -27.0 / 16, -9.0 / 16, 27.0 / 16},
    {9.0 / 16, 27.0 / 16, -9.0 / 16, -27.0 / 16},
    {-1.0 / 16, -1.0 / 16, 9.0 / 16, 9.0 / 16},
};
constexpr Functional1d kLagrange3F[4] = {
    {false, -1.0}, {false, -1.0 / 3.0}, {false, 1.0 / 3.0}, {false, 1.0}};

constexpr double kHermite3[4][4] = {
    {0.25, -0.25, -0.25, 0.25},  // (xi+1)(xi-1)^2/4   dual to v'(-1)
    {0.5, -0.75, 0.0, 0.25},     // (xi^3-3xi+2)/4     dual to v(-1)
    {0.5, 0.75, 0.0, -0.25},     //                    dual to v(1)
    {-0.25, -0.25, 0.25, 0.25},  // (xi-1)(xi+1)^2/4   dual to v'(1)
};
constexpr Functional1d kHermite3F[4] = {
    {true, -1.0}, {false, -1.0}, {false, 1.0}, {true, 1.0}};

void check_index(ShapeFamily f, int i) {
  if (i < 0 || i >= family_size(f))
    throw std::invalid_argument("shape1d: shape index out of range");
}

}  // namespace

int family_size(ShapeFamily f) {
  return (f == ShapeFamily::Lagrange2 || f == ShapeFamily::Hermite2) ? 3 : 4;
}

int family_degree(ShapeFamily f) {
  return (f == ShapeFamily::Lagrange2 || f == ShapeFamily::Hermite2) ? 2 : 3;
}

const Functional1d& family_functional(ShapeFamily f, int i) {
  check_index(f, i);
  switch (f) {
    case ShapeFamily::Lagrange2: return kLagrange2F[i];
    case ShapeFamily::Hermite2: return kHermite2F[i];
    case ShapeFamily::Lagrange3: return kLagrange3F[i];
    default: return kHermite3F[i];
  }
}

std::span<const double> shape_coefficients(ShapeFamily f, int i) {
  check_index(f, i);
  switch (f) {
    case ShapeFamily::Lagrange2: return {kLagrange2[i], 3};
    case ShapeFamily::Hermite2: return {kHermite2[i], 3};
    case ShapeFamily::Lagrange3: return {kLagrange3[i], 4};
    default: return {kHermite3[i], 4};
  }
}

double shape_1d(ShapeFamily f, int i, double xi, int order) {
  if (order < 0 || order > 2) throw std::invalid_argument("shape_1d: order in {0,1,2}");
  const auto c = shape_coefficients(f, i);
  // derivative of the monomial expansion, Horner from the top
  double v = 0.0;
  for (int k = static_cast<int>(c.size()) - 1; k >= order; --k) {
    double fac = 1.0;
    for (int d = 0; d < order; ++d) fac *= (k - d);
    v = v * xi + c[static_cast<size_t>(k)] * fac;
  }
  return v;
}

}  // namespace gfem
