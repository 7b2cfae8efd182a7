#ifndef GFEM_EXAMPLES_HPP
#define GFEM_EXAMPLES_HPP

#include <optional>

#include "gfem/geometry.hpp"
#include "gfem/smooth_function.hpp"

namespace gfem {

/// The four benchmark one-obstacle problems: clamped plate, obstacle from
/// below, f as listed; Example 1 carries nonhomogeneous boundary data and a
/// closed-form solution, Example 4 runs on the L-shaped domain.
struct ExampleSpec {
  int id = 0;
  DomainSpec domain = DomainSpec::rectangle(-0.5, 0.5, -0.5, 0.5);
  SmoothFunction f;
  SmoothFunction psi;                // lower obstacle
  std::optional<SmoothFunction> g;   // boundary datum (empty: clamped to zero)
  std::optional<SmoothFunction> exact;
};

ExampleSpec make_example(int id);  // 1..4

namespace example1 {
/// Free-boundary radius and outer-branch constants of the radially symmetric
/// benchmark (obstacle 1-|x|^2 on the disc of radius 2, clamped rim).
inline constexpr double r0 = 0.18134452;
inline constexpr double C1 = 0.52504063;
inline constexpr double C2 = -0.62860904;
inline constexpr double C3 = 0.01726640;
inline constexpr double C4 = 1.04674630;
}  // namespace example1

/// Exact benchmark solution and derivatives (d1 + d2 <= 2): 1 - |x|^2 inside
/// the contact disc |x| <= r0, the quadratic-log biharmonic profile outside.
double exact_example1(Point p, int d1, int d2);

}  // namespace gfem

#endif
