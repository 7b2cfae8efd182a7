#include "gfem/examples.hpp"

#include <cmath>
#include <stdexcept>

namespace gfem {

double exact_example1(Point p, int d1, int d2) {
  using namespace example1;
  const double r2 = p.x * p.x + p.y * p.y;
  const double r = std::sqrt(r2);

  if (r <= r0) {
    // contact branch 1 - |x|^2
    if (d1 + d2 == 0) return 1.0 - r2;
    if (d1 + d2 == 1) return d1 ? -2.0 * p.x : -2.0 * p.y;
    if (d1 == 1 && d2 == 1) return 0.0;
    return -2.0;
  }

  // u(r) = C1 r^2 ln r + C2 r^2 + C3 ln r + C4
  const double lr = std::log(r);
  if (d1 + d2 == 0) return C1 * r2 * lr + C2 * r2 + C3 * lr + C4;

  const double ur = C1 * (2.0 * r * lr + r) + 2.0 * C2 * r + C3 / r;
  if (d1 + d2 == 1) {
    const double xi = d1 ? p.x : p.y;
    return ur * xi / r;
  }

  const double urr = C1 * (2.0 * lr + 3.0) + 2.0 * C2 - C3 / r2;
  // Hessian via u_rr (x_i x_j / r^2) + u_r (delta_ij / r - x_i x_j / r^3)
  const double a = d1 == 2 ? p.x : (d2 == 2 ? p.y : p.x);
  const double b = d1 == 2 ? p.x : (d2 == 2 ? p.y : p.y);
  const double frac = a * b / r2;
  const double kron = (d1 == 2 || d2 == 2) ? 1.0 : 0.0;
  return urr * frac + ur * (kron - frac) / r;
}

namespace {

SmoothFunction exact_example1_function() {
  return SmoothFunction(
      [](Point p) { return exact_example1(p, 0, 0); },
      [](Point p) {
        return std::array<double, 2>{exact_example1(p, 1, 0), exact_example1(p, 0, 1)};
      },
      [](Point p) {
        return std::array<double, 3>{exact_example1(p, 2, 0), exact_example1(p, 1, 1),
                                     exact_example1(p, 0, 2)};
      });
}

// psi = 1 - |x|^2
SmoothFunction obstacle_paraboloid() {
  return SmoothFunction(
      [](Point p) { return 1.0 - p.x * p.x - p.y * p.y; },
      [](Point p) { return std::array<double, 2>{-2.0 * p.x, -2.0 * p.y}; },
      [](Point) { return std::array<double, 3>{-2.0, 0.0, -2.0}; });
}

// psi = 1 - 5|x|^2 + s |x|^4 with s = +-1
SmoothFunction obstacle_quartic(double s) {
  return SmoothFunction(
      [s](Point p) {
        const double r2 = p.x * p.x + p.y * p.y;
        return 1.0 - 5.0 * r2 + s * r2 * r2;
      },
      [s](Point p) {
        const double r2 = p.x * p.x + p.y * p.y;
        const double c = -10.0 + 4.0 * s * r2;
        return std::array<double, 2>{c * p.x, c * p.y};
      },
      [s](Point p) {
        const double r2 = p.x * p.x + p.y * p.y;
        return std::array<double, 3>{-10.0 + 4.0 * s * (r2 + 2.0 * p.x * p.x),
                                     8.0 * s * p.x * p.y,
                                     -10.0 + 4.0 * s * (r2 + 2.0 * p.y * p.y)};
      });
}

// psi = 1 - [(x+0.25)^2/0.2^2 + y^2/0.35^2]
SmoothFunction obstacle_ellipse() {
  constexpr double ax = 1.0 / (0.2 * 0.2);
  constexpr double ay = 1.0 / (0.35 * 0.35);
  return SmoothFunction(
      [](Point p) {
        const double dx = p.x + 0.25;
        return 1.0 - (dx * dx * ax + p.y * p.y * ay);
      },
      [](Point p) {
        return std::array<double, 2>{-2.0 * ax * (p.x + 0.25), -2.0 * ay * p.y};
      },
      [](Point) { return std::array<double, 3>{-2.0 * ax, 0.0, -2.0 * ay}; });
}

}  // namespace

ExampleSpec make_example(int id) {
  ExampleSpec e;
  e.id = id;
  e.f = SmoothFunction::zero();
  switch (id) {
    case 1:
      e.domain = DomainSpec::rectangle(-0.5, 0.5, -0.5, 0.5);
      e.psi = obstacle_paraboloid();
      e.g = exact_example1_function();
      e.exact = exact_example1_function();
      break;
    case 2:
      e.domain = DomainSpec::rectangle(-0.5, 0.5, -0.5, 0.5);
      e.psi = obstacle_quartic(1.0);
      break;
    case 3:
      e.domain = DomainSpec::rectangle(-0.5, 0.5, -0.5, 0.5);
      e.psi = obstacle_quartic(-1.0);
      break;
    case 4:
      e.domain = DomainSpec::lshape(0.5);
      e.psi = obstacle_ellipse();
      break;
    default:
      throw std::invalid_argument("make_example: id must be 1..4");
  }
  return e;
}

}  // namespace gfem
