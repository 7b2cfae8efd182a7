#include "gfem/window.hpp"

#include <stdexcept>

namespace gfem {

namespace {

// phiL on [-1,0]; phiL(-1) = 0, phiL(0) = 1, C^1 at both ends.
double phi_left(double t, int order) {
  switch (order) {
    case 0: return (1.0 + t) * (1.0 + t) * (1.0 - 2.0 * t);
    case 1: return -6.0 * t * (1.0 + t);
    default: return -6.0 * (1.0 + 2.0 * t);
  }
}

// phiR on [0,1]; the mirror image of phiL.
double phi_right(double t, int order) {
  switch (order) {
    case 0: return (1.0 - t) * (1.0 - t) * (1.0 + 2.0 * t);
    case 1: return -6.0 * t * (1.0 - t);
    default: return -6.0 * (1.0 - 2.0 * t);
  }
}

}  // namespace

void FlatTopParams::validate() const {
  if (!(delta1 > 0.0 && delta1 < 1.0) || !(delta2 > 0.0 && delta2 < 1.0))
    throw std::invalid_argument("FlatTopParams: overlap fractions must lie in (0,1)");
}

double window_1d(double x, double delta, int order) {
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("window_1d: delta must lie in (0,1)");
  if (order < 0 || order > 2)
    throw std::invalid_argument("window_1d: order must be 0, 1 or 2");

  if (x < -1.0 - delta || x > 1.0 + delta) return 0.0;

  const double scale = 1.0 / (2.0 * delta);  // dt/dx on the ramps
  double chain = 1.0;
  for (int k = 0; k < order; ++k) chain *= scale;

  if (x <= -1.0 + delta) return phi_left((x + 1.0 - delta) * scale, order) * chain;
  if (x <= 1.0 - delta) return order == 0 ? 1.0 : 0.0;
  return phi_right((x - 1.0 + delta) * scale, order) * chain;
}

}  // namespace gfem
