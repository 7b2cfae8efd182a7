#include "gfem/smooth_function.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace gfem {

SmoothFunction SmoothFunction::zero() { return constant(0.0); }

SmoothFunction SmoothFunction::constant(double c) {
  return SmoothFunction([c](Point) { return c; },
                        [](Point) { return std::array<double, 2>{0.0, 0.0}; },
                        [](Point) { return std::array<double, 3>{0.0, 0.0, 0.0}; });
}

SmoothFunction SmoothFunction::polynomial(std::vector<double> coeffs, int n) {
  if (static_cast<int>(coeffs.size()) != n * n)
    throw std::invalid_argument("SmoothFunction::polynomial: coeffs must be n*n");
  auto eval = [coeffs, n](Point p, int d1, int d2) {
    double v = 0.0;
    for (int k = d1; k < n; ++k)
      for (int l = d2; l < n; ++l) {
        double fac = 1.0;
        for (int d = 0; d < d1; ++d) fac *= (k - d);
        for (int d = 0; d < d2; ++d) fac *= (l - d);
        v += coeffs[static_cast<size_t>(k * n + l)] * fac * std::pow(p.x, k - d1) *
             std::pow(p.y, l - d2);
      }
    return v;
  };
  return SmoothFunction(
      [eval](Point p) { return eval(p, 0, 0); },
      [eval](Point p) {
        return std::array<double, 2>{eval(p, 1, 0), eval(p, 0, 1)};
      },
      [eval](Point p) {
        return std::array<double, 3>{eval(p, 2, 0), eval(p, 1, 1), eval(p, 0, 2)};
      });
}

double SmoothFunction::derivative(Point p, int d1, int d2) const {
  const int total = d1 + d2;
  if (d1 < 0 || d2 < 0 || total > 2)
    throw std::invalid_argument("SmoothFunction::derivative: order out of range");
  if (total == 0) return value_(p);
  if (total == 1) {
    const auto g = grad_(p);
    return d1 == 1 ? g[0] : g[1];
  }
  if (!hess_)
    throw std::invalid_argument("SmoothFunction: second derivatives unavailable");
  const auto h = hess_(p);
  if (d1 == 2) return h[0];
  if (d2 == 2) return h[2];
  return h[1];
}

}  // namespace gfem
