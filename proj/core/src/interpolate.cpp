#include "gfem/interpolate.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gfem/errors.hpp"
#include "gfem/quadrature.hpp"

namespace gfem {

namespace {

// Legendre polynomials in monomial form, P0..P3.
constexpr double kLegendre[4][4] = {
    {1.0, 0.0, 0.0, 0.0},
    {0.0, 1.0, 0.0, 0.0},
    {-0.5, 0.0, 1.5, 0.0},
    {0.0, -1.5, 0.0, 2.5},
};

double polyval(const std::vector<double>& c, double x) {
  double v = 0.0;
  for (size_t k = c.size(); k-- > 0;) v = v * x + c[k];
  return v;
}

double polyder_val(const std::vector<double>& c, double x) {
  double v = 0.0;
  for (size_t k = c.size(); k-- > 1;) v = v * x + c[k] * static_cast<double>(k);
  return v;
}

}  // namespace

std::vector<double> edge_projection(const std::function<double(double)>& fn, int degree) {
  if (degree < 0 || degree > 3)
    throw std::invalid_argument("edge_projection: degree must be in [0,3]");
  const GaussRule& rule = gauss_rule(10);
  std::vector<double> mono(static_cast<size_t>(degree) + 1, 0.0);
  for (int n = 0; n <= degree; ++n) {
    double a = 0.0;
    for (int q = 0; q < rule.order; ++q) {
      const double x = rule.nodes[static_cast<size_t>(q)];
      double pn = 0.0;
      for (int k = n; k >= 0; --k) pn = pn * x + kLegendre[n][k];
      a += rule.weights[static_cast<size_t>(q)] * fn(x) * pn;
    }
    a *= 0.5 * (2.0 * n + 1.0);  // divide by ||P_n||^2 = 2/(2n+1)
    for (int k = 0; k <= n; ++k) mono[static_cast<size_t>(k)] += a * kLegendre[n][k];
  }
  return mono;
}

std::array<double, 3> edge_projection_quadratic(const std::function<double(double)>& fn) {
  const auto c = edge_projection(fn, 2);
  return {c[0], c[1], c[2]};
}

namespace {

// Interpolation data for one patch: value/derivative functionals applied to
// zeta in reference coordinates, with edge projections on boundary sides.
class LocalInterpolator {
 public:
  LocalInterpolator(const GfemSpace& space, int j, const SmoothFunction& zeta)
      : space_(space), zeta_(zeta), j_(j), map_(space.map(j)),
        elem_(space.element(j)) {
    jac1_ = map_.a1.sign * map_.a1.s;
    jac2_ = map_.a2.sign * map_.a2.s;
  }

  void run(double* out) {
    if (elem_.l_shaped()) run_l(out);
    else run_tensor(out);
  }

 private:
  double ref_value(double xi1, double xi2) const {
    return zeta_.value(map_.to_physical(xi1, xi2));
  }
  double ref_d1(double xi1, double xi2) const {
    return jac1_ * zeta_.gradient(map_.to_physical(xi1, xi2))[0];
  }
  double ref_d2(double xi1, double xi2) const {
    return jac2_ * zeta_.gradient(map_.to_physical(xi1, xi2))[1];
  }
  double ref_d12(double xi1, double xi2) const {
    return jac1_ * jac2_ * zeta_.hessian(map_.to_physical(xi1, xi2))[1];
  }

  void run_tensor(double* out) {
    const PatchClass& cls = space_.patch_class(j_);
    const ShapeFamily f1 = axis_family(cls.bc1, space_.space_kind());
    const ShapeFamily f2 = axis_family(cls.bc2, space_.space_kind());
    const int n1 = family_size(f1), n2 = family_size(f2);
    const bool hermite1 = f1 == ShapeFamily::Hermite2 || f1 == ShapeFamily::Hermite3;
    const bool hermite2 = f2 == ShapeFamily::Hermite2 || f2 == ShapeFamily::Hermite3;

    // Projections of the normal-derivative data along the boundary sides
    // (xi = -1 always maps onto the boundary).
    std::vector<double> lambda, mu;
    if (hermite1)
      lambda = edge_projection([this](double xi2) { return ref_d1(-1.0, xi2); },
                               family_degree(f2));
    if (hermite2)
      mu = edge_projection([this](double xi1) { return ref_d2(xi1, -1.0); },
                           family_degree(f1));

    for (int l = 0; l < n2; ++l) {
      const Functional1d& g2 = family_functional(f2, l);
      for (int k = 0; k < n1; ++k) {
        const Functional1d& g1 = family_functional(f1, k);
        double v;
        if (!g1.derivative && !g2.derivative) {
          v = ref_value(g1.node, g2.node);
        } else if (g1.derivative && !g2.derivative) {
          v = (g1.node == -1.0) ? polyval(lambda, g2.node) : ref_d1(g1.node, g2.node);
        } else if (!g1.derivative && g2.derivative) {
          v = (g2.node == -1.0) ? polyval(mu, g1.node) : ref_d2(g1.node, g2.node);
        } else if (g1.node == -1.0 && g2.node == -1.0) {
          // both edges claim the boundary-corner mixed value; average them
          v = 0.5 * (polyder_val(lambda, -1.0) + polyder_val(mu, -1.0));
        } else {
          if (!zeta_.has_hessian())
            throw capability_error(
                "interpolate: mixed-derivative data requires second derivatives");
          v = ref_d12(g1.node, g2.node);
        }
        out[l * n1 + k] = v;
      }
    }
  }

  void run_l(double* out) {
    const int n = elem_.size();
    if (!zeta_.has_hessian()) {
      // Only the identically-zero datum is interpolable without second
      // derivatives (the clamped g = 0 case).
      bool all_zero = true;
      for (int i = 0; i < n; ++i) {
        const NodalFunctional& nf = elem_.functional(i);
        if (nf.kind == DofKind::D1D2) continue;
        double v = 0.0;
        if (nf.kind == DofKind::Value) v = ref_value(nf.xi1, nf.xi2);
        else if (nf.kind == DofKind::D1) v = ref_d1(nf.xi1, nf.xi2);
        else v = ref_d2(nf.xi1, nf.xi2);
        all_zero = all_zero && v == 0.0;
      }
      if (!all_zero) {
        std::ostringstream os;
        os << "interpolate: patch " << j_
           << " uses the L-shaped element, whose interpolant needs second "
              "derivatives for nonzero data";
        throw capability_error(os.str());
      }
      for (int i = 0; i < n; ++i) out[i] = 0.0;
      return;
    }
    for (int i = 0; i < n; ++i) {
      const NodalFunctional& nf = elem_.functional(i);
      switch (nf.kind) {
        case DofKind::Value: out[i] = ref_value(nf.xi1, nf.xi2); break;
        case DofKind::D1: out[i] = ref_d1(nf.xi1, nf.xi2); break;
        case DofKind::D2: out[i] = ref_d2(nf.xi1, nf.xi2); break;
        default: out[i] = ref_d12(nf.xi1, nf.xi2); break;
      }
    }
  }

  const GfemSpace& space_;
  const SmoothFunction& zeta_;
  int j_;
  const FlatTopMap& map_;
  const ReferenceElement& elem_;
  double jac1_ = 1.0, jac2_ = 1.0;
};

}  // namespace

Eigen::VectorXd interpolate(const GfemSpace& space, const SmoothFunction& zeta) {
  Eigen::VectorXd c(space.dof_count());
  double local[16];
  for (int j : space.grid().alive()) {
    LocalInterpolator li(space, j, zeta);
    li.run(local);
    const int base = space.dofs().patch_offset(j);
    const int n = space.element(j).size();
    for (int i = 0; i < n; ++i) c[base + i] = local[i];
  }
  return c;
}

std::vector<std::pair<int, double>> boundary_coefficients(const GfemSpace& space,
                                                          const SmoothFunction& g) {
  std::vector<std::pair<int, double>> out;
  double local[16];
  for (int j : space.grid().alive()) {
    if (!space.patch_class(j).touches_boundary()) continue;
    LocalInterpolator li(space, j, g);
    li.run(local);
    const int base = space.dofs().patch_offset(j);
    const int n = space.element(j).size();
    for (int i = 0; i < n; ++i) {
      const int gid = base + i;
      if (space.dofs()[gid].on_boundary) out.emplace_back(gid, local[i]);
    }
  }
  return out;
}

}  // namespace gfem
