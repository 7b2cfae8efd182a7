#include "gfem/space.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include "gfem/window.hpp"

namespace gfem {

GfemSpace GfemSpace::build(const DomainSpec& domain, int level, FlatTopParams params,
                           SpaceKind kind) {
  GfemSpace s;
  s.grid_ = PatchGrid::build(domain, level, params);
  s.kind_ = kind;
  s.classes_ = classify_patches(s.grid_);
  s.elements_.assign(static_cast<size_t>(s.grid_.patch_count()), nullptr);
  s.maps_.resize(static_cast<size_t>(s.grid_.patch_count()));
  for (int j : s.grid_.alive()) {
    const auto& cls = s.classes_[static_cast<size_t>(j)];
    s.elements_[static_cast<size_t>(j)] = &build_reference_element(cls, kind);
    s.maps_[static_cast<size_t>(j)] = build_flat_top_map(s.grid_.patch(j), cls, s.grid_);
  }
  s.dofs_ = enumerate_dofs(s.grid_, s.classes_, s.elements_, s.maps_);
  return s;
}

bool GfemSpace::l_element_n8_moved() const {
  for (int j : grid_.alive())
    if (classes_[static_cast<size_t>(j)].l_element)
      return elements_[static_cast<size_t>(j)]->n8_moved();
  return false;
}

namespace {

// Physical-derivative power tables P[d][k] = (xi^k)^{(d)} * (dxi/dx)^d.
void power_table(double xi, double dxi_dx, int n, double P[3][4]) {
  double pows[6];  // xi^0 .. xi^{n-1}
  pows[0] = 1.0;
  for (int k = 1; k < n; ++k) pows[k] = pows[k - 1] * xi;
  const double c1 = dxi_dx, c2 = dxi_dx * dxi_dx;
  for (int k = 0; k < n; ++k) {
    P[0][k] = pows[k];
    P[1][k] = k >= 1 ? k * pows[k - 1] * c1 : 0.0;
    P[2][k] = k >= 2 ? k * (k - 1) * pows[k - 2] * c2 : 0.0;
  }
}

}  // namespace

bool GfemSpace::local_values(int j, Point p, LocalValues& out) const {
  const Patch& patch = grid_.patch(j);
  out.patch = j;
  out.count = 0;
  if (!patch.alive || !patch.support.contains(p)) return false;

  const ReferenceElement& elem = *elements_[static_cast<size_t>(j)];
  const FlatTopMap& map = maps_[static_cast<size_t>(j)];
  const int n = elem.degree() + 1;
  out.count = elem.size();

  double xi1, xi2;
  map.to_reference(p, xi1, xi2);
  double P1[3][4], P2[3][4];
  power_table(xi1, map.a1.dxi_dx(), n, P1);
  power_table(xi2, map.a2.dxi_dx(), n, P2);

  // window factors and their physical derivatives
  const double sx = 2.0 / grid_.hx(), sy = 2.0 / grid_.hy();
  const double ux = (p.x - patch.center.x) * sx;
  const double uy = (p.y - patch.center.y) * sy;
  const double d1 = grid_.params().delta1, d2 = grid_.params().delta2;
  const double w1[3] = {window_1d(ux, d1, 0), window_1d(ux, d1, 1) * sx,
                        window_1d(ux, d1, 2) * sx * sx};
  const double w2[3] = {window_1d(uy, d2, 0), window_1d(uy, d2, 1) * sy,
                        window_1d(uy, d2, 2) * sy * sy};

  for (int i = 0; i < elem.size(); ++i) {
    // shape derivatives S[a][b], a: d/dx order, b: d/dy order
    double S[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        const double c = elem.eval_coeff(i, k, l);
        if (c == 0.0) continue;
        S[0][0] += c * P1[0][k] * P2[0][l];
        S[1][0] += c * P1[1][k] * P2[0][l];
        S[0][1] += c * P1[0][k] * P2[1][l];
        S[2][0] += c * P1[2][k] * P2[0][l];
        S[1][1] += c * P1[1][k] * P2[1][l];
        S[0][2] += c * P1[0][k] * P2[2][l];
      }
    double* phi = out.phi[i];
    phi[0] = w1[0] * w2[0] * S[0][0];
    phi[1] = w1[1] * w2[0] * S[0][0] + w1[0] * w2[0] * S[1][0];
    phi[2] = w1[0] * w2[1] * S[0][0] + w1[0] * w2[0] * S[0][1];
    phi[3] = w1[2] * w2[0] * S[0][0] + 2.0 * w1[1] * w2[0] * S[1][0] +
             w1[0] * w2[0] * S[2][0];
    phi[4] = w1[1] * w2[1] * S[0][0] + w1[1] * w2[0] * S[0][1] +
             w1[0] * w2[1] * S[1][0] + w1[0] * w2[0] * S[1][1];
    phi[5] = w1[0] * w2[2] * S[0][0] + 2.0 * w1[0] * w2[1] * S[0][1] +
             w1[0] * w2[0] * S[0][2];
  }
  return true;
}

namespace {

int deriv_slot(int d1, int d2) {
  if (d1 < 0 || d2 < 0 || d1 + d2 > 2)
    throw std::invalid_argument("derivative order out of range (total <= 2)");
  if (d1 == 0 && d2 == 0) return 0;
  if (d1 == 1 && d2 == 0) return 1;
  if (d1 == 0 && d2 == 1) return 2;
  if (d1 == 2) return 3;
  if (d1 == 1) return 4;
  return 5;
}

}  // namespace

double GfemSpace::basis_eval(int dof, Point p, int d1, int d2) const {
  const int slot = deriv_slot(d1, d2);
  const Dof& d = dofs_[dof];
  LocalValues lv;
  if (!local_values(d.patch, p, lv)) return 0.0;
  return lv.phi[d.local][slot];
}

double GfemSpace::evaluate(const Eigen::VectorXd& coeffs, Point p, int d1, int d2) const {
  if (coeffs.size() != dof_count())
    throw std::invalid_argument("evaluate: coefficient vector has wrong length");
  const int slot = deriv_slot(d1, d2);
  thread_local std::vector<int> cover;
  grid_.covering_patches(p, cover);
  double v = 0.0;
  LocalValues lv;
  for (int j : cover) {
    if (!local_values(j, p, lv)) continue;
    const int base = dofs_.patch_offset(j);
    for (int i = 0; i < lv.count; ++i) v += coeffs[base + i] * lv.phi[i][slot];
  }
  return v;
}

SmoothFunction GfemSpace::field_function(Eigen::VectorXd coeffs) const {
  auto c = std::make_shared<Eigen::VectorXd>(std::move(coeffs));
  const GfemSpace* s = this;
  return SmoothFunction(
      [s, c](Point p) { return s->evaluate(*c, p, 0, 0); },
      [s, c](Point p) {
        return std::array<double, 2>{s->evaluate(*c, p, 1, 0), s->evaluate(*c, p, 0, 1)};
      },
      [s, c](Point p) {
        return std::array<double, 3>{s->evaluate(*c, p, 2, 0), s->evaluate(*c, p, 1, 1),
                                     s->evaluate(*c, p, 0, 2)};
      });
}

}  // namespace gfem
