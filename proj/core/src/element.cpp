#include "gfem/element.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "gfem/errors.hpp"

namespace gfem {

PatchClass::Kind PatchClass::kind() const {
  if (l_element) return Kind::LCorner;
  const bool b1 = bc1 != AxisBc::None;
  const bool b2 = bc2 != AxisBc::None;
  if (b1 && b2) return Kind::Corner;
  if (!b1 && !b2) return Kind::Interior;
  const AxisBc bc = b1 ? bc1 : bc2;
  return bc == AxisBc::ReentrantHigh ? Kind::ReentrantEdge : Kind::Edge;
}

std::vector<PatchClass> classify_patches(const PatchGrid& grid) {
  const DomainSpec& domain = grid.domain();
  const bool lshape = domain.kind() == DomainSpec::Kind::LShape;
  const int m = grid.nx();
  const int mid = (m - 1) / 2;
  const auto segments = domain.boundary_segments();

  std::vector<PatchClass> classes(static_cast<size_t>(grid.patch_count()));
  for (int j : grid.alive()) {
    const Patch& p = grid.patch(j);
    PatchClass c;
    if (p.ix == 0) c.bc1 = AxisBc::Low;
    else if (p.ix == m - 1) c.bc1 = AxisBc::High;
    if (p.iy == 0) c.bc2 = AxisBc::Low;
    else if (p.iy == m - 1) c.bc2 = AxisBc::High;
    if (lshape) {
      if (p.ix == mid && p.iy == mid) {
        c = PatchClass{};
        c.l_element = true;
      } else {
        if (p.ix == mid && p.iy > mid) c.bc1 = AxisBc::ReentrantHigh;
        if (p.iy == mid && p.ix > mid) c.bc2 = AxisBc::ReentrantHigh;
      }
    }

    // The class must agree with the actual boundary contact of the patch.
    bool touches = false;
    for (const auto& s : segments) touches = touches || segment_intersects(s, p.cell);
    if (touches != c.touches_boundary()) {
      std::ostringstream os;
      os << "classify_patches: patch " << j << " at (" << p.ix << "," << p.iy
         << ") is cut by the boundary in an unsupported way";
      throw std::runtime_error(os.str());
    }
    classes[static_cast<size_t>(j)] = c;
  }
  return classes;
}

double ReferenceElement::eval(int i, double xi1, double xi2, int d1, int d2) const {
  const int n = degree_ + 1;
  const double* c = coeffs_.data() + static_cast<size_t>(i) * n * n;
  // powers with falling-factorial derivative weights
  double p1[4], p2[4];
  for (int k = 0; k < n; ++k) {
    if (k < d1) {
      p1[k] = 0.0;
    } else {
      double fac = 1.0;
      for (int d = 0; d < d1; ++d) fac *= (k - d);
      p1[k] = fac * std::pow(xi1, k - d1);
    }
    if (k < d2) {
      p2[k] = 0.0;
    } else {
      double fac = 1.0;
      for (int d = 0; d < d2; ++d) fac *= (k - d);
      p2[k] = fac * std::pow(xi2, k - d2);
    }
  }
  double v = 0.0;
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) v += c[k * n + l] * p1[k] * p2[l];
  return v;
}

ReferenceElement ReferenceElement::make_tensor(ShapeFamily f1, ShapeFamily f2) {
  ReferenceElement e;
  const int n1 = family_size(f1), n2 = family_size(f2);
  e.degree_ = family_degree(f1);
  if (family_degree(f2) != e.degree_)
    throw std::invalid_argument("tensor element: mixed degrees unsupported");
  const int n = e.degree_ + 1;
  e.coeffs_.assign(static_cast<size_t>(n1) * n2 * n * n, 0.0);
  for (int l = 0; l < n2; ++l) {
    for (int k = 0; k < n1; ++k) {
      const int i = l * n1 + k;
      const auto c1 = shape_coefficients(f1, k);
      const auto c2 = shape_coefficients(f2, l);
      double* c = e.coeffs_.data() + static_cast<size_t>(i) * n * n;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) c[a * n + b] = c1[a] * c2[b];
      const Functional1d& g1 = family_functional(f1, k);
      const Functional1d& g2 = family_functional(f2, l);
      DofKind kind = DofKind::Value;
      if (g1.derivative && g2.derivative) kind = DofKind::D1D2;
      else if (g1.derivative) kind = DofKind::D1;
      else if (g2.derivative) kind = DofKind::D2;
      e.functionals_.push_back({g1.node, g2.node, kind});
    }
  }
  return e;
}

ReferenceElement ReferenceElement::make_l(
    const std::vector<NodalFunctional>& functionals, bool moved) {
  // Nodal matrix over the monomial basis xi1^k xi2^l, k,l <= 2.
  Eigen::MatrixXd A(9, 9);
  for (int nfi = 0; nfi < 9; ++nfi) {
    const NodalFunctional& nf = functionals[static_cast<size_t>(nfi)];
    const int d1 = (nf.kind == DofKind::D1 || nf.kind == DofKind::D1D2) ? 1 : 0;
    const int d2 = (nf.kind == DofKind::D2 || nf.kind == DofKind::D1D2) ? 1 : 0;
    for (int k = 0; k < 3; ++k)
      for (int l = 0; l < 3; ++l) {
        double v = 0.0;
        if (k >= d1 && l >= d2) {
          const double fk = d1 ? k : 1.0;
          const double fl = d2 ? l : 1.0;
          v = fk * fl * std::pow(nf.xi1, k - d1) * std::pow(nf.xi2, l - d2);
        }
        A(nfi, 3 * l + k) = v;
      }
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
  if (lu.rank() < 9) {
    ReferenceElement bad;
    bad.degree_ = -1;
    return bad;
  }
  if (lu.rcond() < 1e-10)
    throw std::runtime_error("L element: nodal matrix is numerically singular");

  const Eigen::MatrixXd B = lu.inverse();  // column i holds dual shape i
  ReferenceElement e;
  e.degree_ = 2;
  e.l_shaped_ = true;
  e.n8_moved_ = moved;
  e.functionals_ = functionals;
  e.coeffs_.assign(9 * 9, 0.0);
  for (int i = 0; i < 9; ++i) {
    double* c = e.coeffs_.data() + static_cast<size_t>(i) * 9;
    for (int k = 0; k < 3; ++k)
      for (int l = 0; l < 3; ++l) c[k * 3 + l] = B(3 * l + k, i);
  }
  return e;
}

ReferenceElement ReferenceElement::make_l_corner() {
  // Nodal variables on the reference L (-1,1)^2 \ [0,1]^2. The first set
  // places N8 at (0,1); if its nodal matrix is singular on Q2 (it is), N8
  // moves to (1,0), completing the normal-derivative data along the
  // horizontal reentrant arm.
  std::vector<NodalFunctional> literal = {
      {0, 0, DofKind::Value},   {1, 0, DofKind::Value}, {0, 1, DofKind::Value},
      {-1, -1, DofKind::Value}, {0, 0, DofKind::D1},    {0, 1, DofKind::D1},
      {0, 0, DofKind::D2},      {0, 1, DofKind::D2},    {0, 0, DofKind::D1D2}};
  ReferenceElement e = make_l(literal, false);
  if (e.degree() >= 0) return e;
  std::vector<NodalFunctional> moved = literal;
  moved[7] = {1, 0, DofKind::D2};
  e = make_l(moved, true);
  if (e.degree() < 0)
    throw std::runtime_error("L element: no nonsingular nodal variant found");
  return e;
}

namespace {

struct ElementStore {
  std::map<std::pair<int, int>, ReferenceElement> tensor;
  ReferenceElement* l = nullptr;
};
ElementStore& store() {
  static ElementStore s;
  return s;
}

}  // namespace

const ReferenceElement& ReferenceElement::tensor(ShapeFamily f1, ShapeFamily f2) {
  auto key = std::make_pair(static_cast<int>(f1), static_cast<int>(f2));
  auto& cache = store().tensor;
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, make_tensor(f1, f2)).first;
  return it->second;
}

const ReferenceElement& ReferenceElement::l_corner() {
  auto& s = store();
  if (s.l == nullptr) s.l = new ReferenceElement(make_l_corner());
  return *s.l;
}

ShapeFamily axis_family(AxisBc bc, SpaceKind space) {
  const bool cubic = space == SpaceKind::Q3;
  if (bc == AxisBc::None) return cubic ? ShapeFamily::Lagrange3 : ShapeFamily::Lagrange2;
  return cubic ? ShapeFamily::Hermite3 : ShapeFamily::Hermite2;
}

FlatTopMap build_flat_top_map(const Patch& patch, const PatchClass& cls,
                              const PatchGrid& grid) {
  (void)grid;
  const double fx = 0.5 * patch.flat.width();
  const double fy = 0.5 * patch.flat.height();

  if (cls.l_element) {
    return {{patch.center.x, fx, 1.0}, {patch.center.y, fy, 1.0}};
  }
  auto axis = [](double center, double half, AxisBc bc) -> AxisMap {
    switch (bc) {
      case AxisBc::ReentrantHigh:
        // in-domain (low) half of the flat top, boundary at its high end
        return {center - 0.5 * half, 0.5 * half, -1.0};
      case AxisBc::High:
        return {center, half, -1.0};
      default:
        return {center, half, 1.0};
    }
  };
  return {axis(patch.center.x, fx, cls.bc1), axis(patch.center.y, fy, cls.bc2)};
}

const ReferenceElement& build_reference_element(const PatchClass& cls, SpaceKind space) {
  if (cls.l_element) {
    if (space == SpaceKind::Q3)
      throw capability_error("the L-shaped reference element supports Q2 only");
    return ReferenceElement::l_corner();
  }
  return ReferenceElement::tensor(axis_family(cls.bc1, space),
                                  axis_family(cls.bc2, space));
}

}  // namespace gfem
