#ifndef GFEM_ELEMENT_HPP
#define GFEM_ELEMENT_HPP

#include <vector>

#include "gfem/geometry.hpp"
#include "gfem/patch_grid.hpp"
#include "gfem/shape1d.hpp"

namespace gfem {

enum class SpaceKind { Q2, Q3 };

enum class DofKind { Value, D1, D2, D1D2 };

/// How a patch axis meets the domain boundary.
///   None          no contact along this axis
///   Low / High    the flat-top edge on that side lies on the boundary
///   ReentrantHigh the boundary passes through the flat-top center line;
///                 the element is re-mapped onto the in-domain (low) half,
///                 with the boundary on its high side
enum class AxisBc { None, Low, High, ReentrantHigh };

struct PatchClass {
  AxisBc bc1 = AxisBc::None;
  AxisBc bc2 = AxisBc::None;
  bool l_element = false;  // reference-L element at the reentrant corner

  enum class Kind { Interior, Edge, Corner, ReentrantEdge, LCorner };
  Kind kind() const;
  bool touches_boundary() const {
    return l_element || bc1 != AxisBc::None || bc2 != AxisBc::None;
  }
};

/// One class per patch id (dead patches keep the default). Throws
/// std::runtime_error naming the patch if the geometry cannot be classified
/// consistently with the boundary.
std::vector<PatchClass> classify_patches(const PatchGrid& grid);

/// Nodal functional on the reference element: a point value, first
/// derivative, or mixed second derivative at (xi1, xi2).
struct NodalFunctional {
  double xi1, xi2;
  DofKind kind;
};

/// Shape functions stored as monomial coefficient tables over the reference
/// square (or reference L), dual to the element's nodal functionals.
class ReferenceElement {
 public:
  int size() const { return static_cast<int>(functionals_.size()); }
  int degree() const { return degree_; }
  bool l_shaped() const { return l_shaped_; }
  /// L element only: true if the nodal set with N8 at (0,1) was singular and
  /// the (1,0) variant is in use.
  bool n8_moved() const { return n8_moved_; }

  const NodalFunctional& functional(int i) const {
    return functionals_[static_cast<size_t>(i)];
  }

  /// d^d1/dxi1 d^d2/dxi2 of shape i at (xi1, xi2).
  double eval(int i, double xi1, double xi2, int d1, int d2) const;

  /// Monomial coefficient of xi1^k xi2^l in shape i.
  double eval_coeff(int i, int k, int l) const {
    const int n = degree_ + 1;
    return coeffs_[(static_cast<size_t>(i) * n + k) * n + l];
  }

  /// Apply nodal functional n to an arbitrary smooth reference function given
  /// by callbacks; used by tests for the duality property.
  template <class F>
  double apply_functional(int n, F&& ref_derivative) const {
    const NodalFunctional& nf = functionals_[static_cast<size_t>(n)];
    switch (nf.kind) {
      case DofKind::Value: return ref_derivative(nf.xi1, nf.xi2, 0, 0);
      case DofKind::D1: return ref_derivative(nf.xi1, nf.xi2, 1, 0);
      case DofKind::D2: return ref_derivative(nf.xi1, nf.xi2, 0, 1);
      default: return ref_derivative(nf.xi1, nf.xi2, 1, 1);
    }
  }

  /// Cached tensor-product element for the two 1-D families.
  static const ReferenceElement& tensor(ShapeFamily f1, ShapeFamily f2);
  /// Cached biquadratic element on the reference L (built by inverting the
  /// 9x9 nodal matrix; see n8_moved()).
  static const ReferenceElement& l_corner();

 private:
  ReferenceElement() = default;
  static ReferenceElement make_tensor(ShapeFamily f1, ShapeFamily f2);
  // returns degree -1 if the nodal matrix is singular
  static ReferenceElement make_l(const std::vector<NodalFunctional>& functionals,
                                 bool moved);
  static ReferenceElement make_l_corner();

  int degree_ = 2;
  bool l_shaped_ = false;
  bool n8_moved_ = false;
  std::vector<NodalFunctional> functionals_;
  std::vector<double> coeffs_;  // size * (degree+1)^2, c[k][l] of xi1^k xi2^l
};

/// 1-D shape family used along an axis with the given boundary condition.
ShapeFamily axis_family(AxisBc bc, SpaceKind space);

/// Affine chart x = t + sign * s * xi of one axis.
struct AxisMap {
  double t = 0.0;   // target center
  double s = 1.0;   // target half-width
  double sign = 1.0;
  double to_x(double xi) const { return t + sign * s * xi; }
  double to_xi(double x) const { return sign * (x - t) / s; }
  double dxi_dx() const { return sign / s; }
};

/// Affine map from the reference square (or reference L) onto the flat-top
/// region -- or onto its in-domain half along re-mapped axes. Axes with a
/// boundary condition are oriented so xi = -1 lands on the boundary.
struct FlatTopMap {
  AxisMap a1, a2;
  Point to_physical(double xi1, double xi2) const {
    return {a1.to_x(xi1), a2.to_x(xi2)};
  }
  void to_reference(Point p, double& xi1, double& xi2) const {
    xi1 = a1.to_xi(p.x);
    xi2 = a2.to_xi(p.y);
  }
};

FlatTopMap build_flat_top_map(const Patch& patch, const PatchClass& cls,
                              const PatchGrid& grid);

/// Reference element for a classified patch. Q3 is available for the three
/// tensor-product kinds only.
const ReferenceElement& build_reference_element(const PatchClass& cls, SpaceKind space);

}  // namespace gfem

#endif
