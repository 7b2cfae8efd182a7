#include "gfem/assembly.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "gfem/quadrature.hpp"

namespace gfem {

int default_rule_order(SpaceKind kind) {
  // Window ramps are cubics, so second derivatives of the basis have
  // per-variable degree <= deg+1 and plain values <= deg+3; pairwise products
  // stay below 2n-1 for n = 6 (Q2) and n = 8 (Q3).
  return kind == SpaceKind::Q2 ? 6 : 8;
}

namespace {

struct CellPatchData {
  int patch;
  int base;   // global id of local 0
  int count;
};

// Gathers the covering patches of a subcell and the flattened local basis
// data at a quadrature point.
class CellKernel {
 public:
  CellKernel(const GfemSpace& space, int rule_order)
      : space_(space),
        rule_(gauss_rule(rule_order ? rule_order : default_rule_order(space.space_kind()))) {}

  const GaussRule& rule() const { return rule_; }

  void set_cell(const Rect& cell) {
    cell_ = cell;
    patches_.clear();
    space_.grid().covering_patches(cell.center(), cover_);
    for (int j : cover_)
      patches_.push_back({j, space_.dofs().patch_offset(j), space_.element(j).size()});
  }

  const std::vector<CellPatchData>& patches() const { return patches_; }

  // quadrature point q = (a, b) indices; returns the physical point and weight
  Point qpoint(int a, int b, double& weight) const {
    const double jx = 0.5 * cell_.width(), jy = 0.5 * cell_.height();
    weight = rule_.weights[static_cast<size_t>(a)] * rule_.weights[static_cast<size_t>(b)] * jx * jy;
    return {cell_.center().x + jx * rule_.nodes[static_cast<size_t>(a)],
            cell_.center().y + jy * rule_.nodes[static_cast<size_t>(b)]};
  }

  // local basis values of all covering patches at p; returns total count
  int basis_at(Point p, LocalValues* lv) const {
    int total = 0;
    for (size_t k = 0; k < patches_.size(); ++k) {
      space_.local_values(patches_[k].patch, p, lv[k]);
      total += lv[k].count;
    }
    return total;
  }

 private:
  const GfemSpace& space_;
  const GaussRule& rule_;
  Rect cell_;
  std::vector<int> cover_;
  std::vector<CellPatchData> patches_;
};

}  // namespace

SparseSym assemble_stiffness(const GfemSpace& space, int rule_order) {
  const SubcellMesh mesh = build_subcell_mesh(space.grid());
  CellKernel kernel(space, rule_order);
  const int nq = kernel.rule().order;
  const int ndof = space.dof_count();

  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(static_cast<size_t>(mesh.cells.size()) * 400);

  LocalValues lv[4];
  std::vector<int> gids;
  std::vector<double> d11, d12, d22;
  Eigen::MatrixXd local;

  for (const Rect& cell : mesh.cells) {
    kernel.set_cell(cell);
    const auto& patches = kernel.patches();
    if (patches.empty()) continue;

    gids.clear();
    for (const auto& cp : patches)
      for (int i = 0; i < cp.count; ++i) gids.push_back(cp.base + i);
    const int nloc = static_cast<int>(gids.size());
    local.setZero(nloc, nloc);
    d11.assign(static_cast<size_t>(nloc), 0.0);
    d12.assign(static_cast<size_t>(nloc), 0.0);
    d22.assign(static_cast<size_t>(nloc), 0.0);

    for (int a = 0; a < nq; ++a) {
      for (int b = 0; b < nq; ++b) {
        double w;
        const Point p = kernel.qpoint(a, b, w);
        kernel.basis_at(p, lv);
        int pos = 0;
        for (size_t k = 0; k < patches.size(); ++k)
          for (int i = 0; i < lv[k].count; ++i, ++pos) {
            d11[static_cast<size_t>(pos)] = lv[k].phi[i][3];
            d12[static_cast<size_t>(pos)] = lv[k].phi[i][4];
            d22[static_cast<size_t>(pos)] = lv[k].phi[i][5];
          }
        for (int r = 0; r < nloc; ++r) {
          const double r11 = d11[static_cast<size_t>(r)] * w;
          const double r12 = 2.0 * d12[static_cast<size_t>(r)] * w;
          const double r22 = d22[static_cast<size_t>(r)] * w;
          for (int c = r; c < nloc; ++c)
            local(r, c) += r11 * d11[static_cast<size_t>(c)] +
                           r12 * d12[static_cast<size_t>(c)] +
                           r22 * d22[static_cast<size_t>(c)];
        }
      }
    }

    for (int r = 0; r < nloc; ++r)
      for (int c = r; c < nloc; ++c) {
        const int gr = gids[static_cast<size_t>(r)], gc = gids[static_cast<size_t>(c)];
        if (gr <= gc) triplets.emplace_back(gr, gc, local(r, c));
        else triplets.emplace_back(gc, gr, local(r, c));
      }
  }

  SparseSym upper(ndof, ndof);
  upper.setFromTriplets(triplets.begin(), triplets.end());
  SparseSym K = upper.selfadjointView<Eigen::Upper>();
  K.makeCompressed();
  return K;
}

Eigen::VectorXd assemble_load(const GfemSpace& space, const SmoothFunction& f,
                              int rule_order) {
  const SubcellMesh mesh = build_subcell_mesh(space.grid());
  CellKernel kernel(space, rule_order);
  const int nq = kernel.rule().order;

  Eigen::VectorXd F = Eigen::VectorXd::Zero(space.dof_count());
  LocalValues lv[4];
  for (const Rect& cell : mesh.cells) {
    kernel.set_cell(cell);
    const auto& patches = kernel.patches();
    if (patches.empty()) continue;
    for (int a = 0; a < nq; ++a)
      for (int b = 0; b < nq; ++b) {
        double w;
        const Point p = kernel.qpoint(a, b, w);
        const double fw = f.value(p) * w;
        if (fw == 0.0) continue;
        kernel.basis_at(p, lv);
        for (size_t k = 0; k < patches.size(); ++k)
          for (int i = 0; i < lv[k].count; ++i)
            F[patches[k].base + i] += fw * lv[k].phi[i][0];
      }
  }
  return F;
}

double energy_value(const SparseSym& K, const Eigen::VectorXd& F,
                    const Eigen::VectorXd& c) {
  if (K.rows() != c.size() || F.size() != c.size())
    throw std::invalid_argument("energy_value: dimension mismatch");
  return 0.5 * c.dot(K * c) - F.dot(c);
}

double integrate(const GfemSpace& space, int rule_order,
                 const std::function<double(Point)>& fn) {
  const SubcellMesh mesh = build_subcell_mesh(space.grid());
  const GaussRule& rule =
      gauss_rule(rule_order ? rule_order : default_rule_order(space.space_kind()));
  double sum = 0.0;
  for (const Rect& cell : mesh.cells) {
    const double jx = 0.5 * cell.width(), jy = 0.5 * cell.height();
    const Point c = cell.center();
    for (int a = 0; a < rule.order; ++a)
      for (int b = 0; b < rule.order; ++b) {
        const Point p{c.x + jx * rule.nodes[static_cast<size_t>(a)],
                      c.y + jy * rule.nodes[static_cast<size_t>(b)]};
        sum += rule.weights[static_cast<size_t>(a)] * rule.weights[static_cast<size_t>(b)] *
               jx * jy * fn(p);
      }
  }
  return sum;
}

ErrorNorms field_error_norms(const GfemSpace& space, const Eigen::VectorXd& coeffs,
                             const SmoothFunction& ref, int rule_order) {
  const SubcellMesh mesh = build_subcell_mesh(space.grid());
  CellKernel kernel(space, rule_order);
  const int nq = kernel.rule().order;

  double l2 = 0.0, h1 = 0.0, h2 = 0.0;
  LocalValues lv[4];
  for (const Rect& cell : mesh.cells) {
    kernel.set_cell(cell);
    const auto& patches = kernel.patches();
    for (int a = 0; a < nq; ++a)
      for (int b = 0; b < nq; ++b) {
        double w;
        const Point p = kernel.qpoint(a, b, w);
        double v[6] = {0, 0, 0, 0, 0, 0};
        kernel.basis_at(p, lv);
        for (size_t k = 0; k < patches.size(); ++k)
          for (int i = 0; i < lv[k].count; ++i) {
            const double ci = coeffs[patches[k].base + i];
            for (int q = 0; q < 6; ++q) v[q] += ci * lv[k].phi[i][q];
          }
        const auto g = ref.gradient(p);
        const auto h = ref.hessian(p);
        const double e0 = v[0] - ref.value(p);
        const double e1 = v[1] - g[0], e2 = v[2] - g[1];
        const double e3 = v[3] - h[0], e4 = v[4] - h[1], e5 = v[5] - h[2];
        l2 += w * e0 * e0;
        h1 += w * (e1 * e1 + e2 * e2);
        h2 += w * (e3 * e3 + 2.0 * e4 * e4 + e5 * e5);
      }
  }
  return {std::sqrt(l2), std::sqrt(h1), std::sqrt(h2)};
}

double field_laplacian_norm(const GfemSpace& space, const Eigen::VectorXd& coeffs,
                            int rule_order) {
  const SubcellMesh mesh = build_subcell_mesh(space.grid());
  CellKernel kernel(space, rule_order);
  const int nq = kernel.rule().order;

  double sum = 0.0;
  LocalValues lv[4];
  for (const Rect& cell : mesh.cells) {
    kernel.set_cell(cell);
    const auto& patches = kernel.patches();
    for (int a = 0; a < nq; ++a)
      for (int b = 0; b < nq; ++b) {
        double w;
        const Point p = kernel.qpoint(a, b, w);
        double lap = 0.0;
        kernel.basis_at(p, lv);
        for (size_t k = 0; k < patches.size(); ++k)
          for (int i = 0; i < lv[k].count; ++i)
            lap += coeffs[patches[k].base + i] * (lv[k].phi[i][3] + lv[k].phi[i][5]);
        sum += w * lap * lap;
      }
  }
  return std::sqrt(sum);
}

void write_matrix_triplets(const SparseSym& K, std::ostream& os) {
  char buf[64];
  for (int k = 0; k < K.outerSize(); ++k)
    for (SparseSym::InnerIterator it(K, k); it; ++it) {
      std::snprintf(buf, sizeof(buf), "%d %d %.17g\n", static_cast<int>(it.row()),
                    static_cast<int>(it.col()), it.value());
      os << buf;
    }
}

}  // namespace gfem
