#include "gfem/quadrature.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace gfem {

namespace {

GaussRule make_rule(int n) {
  GaussRule r;
  r.order = n;
  r.nodes.resize(static_cast<size_t>(n));
  r.weights.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    // Chebyshev initial guess, Newton on P_n via the three-term recurrence.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    r.nodes[static_cast<size_t>(n - 1 - i)] = x;
    r.weights[static_cast<size_t>(n - 1 - i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return r;
}

}  // namespace

const GaussRule& gauss_rule(int n) {
  if (n < 1 || n > 20) throw std::invalid_argument("gauss_rule: order must be in [1,20]");
  static std::array<GaussRule, 21> cache;
  GaussRule& r = cache[static_cast<size_t>(n)];
  if (r.order == 0) r = make_rule(n);
  return r;
}

}  // namespace gfem
