#ifndef GFEM_ASSEMBLY_HPP
#define GFEM_ASSEMBLY_HPP

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <functional>
#include <iosfwd>

#include "gfem/smooth_function.hpp"
#include "gfem/space.hpp"
#include "gfem/subcells.hpp"

namespace gfem {

using SparseSym = Eigen::SparseMatrix<double>;

/// Default tensor Gauss order making the plate form exact for the space
/// (integrands are piecewise polynomial on the subcells).
int default_rule_order(SpaceKind kind);

/// Stiffness matrix K[i][k] = integral of the Frobenius product of the basis
/// Hessians over the domain. Symmetric by construction (upper triangle
/// accumulated, then mirrored); deterministic subcell-major traversal.
SparseSym assemble_stiffness(const GfemSpace& space, int rule_order = 0);

/// Load vector F[i] = (f, phi_i).
Eigen::VectorXd assemble_load(const GfemSpace& space, const SmoothFunction& f,
                              int rule_order = 0);

/// G(c) = 1/2 c'Kc - F'c.
double energy_value(const SparseSym& K, const Eigen::VectorXd& F,
                    const Eigen::VectorXd& c);

/// Integrate fn(p) over the domain with the subcell tensor rule.
double integrate(const GfemSpace& space, int rule_order,
                 const std::function<double(Point)>& fn);

/// L2 norm and H1/H2 seminorms of (field - ref) over the domain.
struct ErrorNorms {
  double l2 = 0.0, h1 = 0.0, h2 = 0.0;
};
ErrorNorms field_error_norms(const GfemSpace& space, const Eigen::VectorXd& coeffs,
                             const SmoothFunction& ref, int rule_order = 0);

/// Laplacian-form energy norm sqrt(int (Delta v)^2) of a field; equal to the
/// Frobenius form c'Kc on fields with clamped (zero) boundary data, larger on
/// fields carrying boundary data.
double field_laplacian_norm(const GfemSpace& space, const Eigen::VectorXd& coeffs,
                            int rule_order = 0);

/// Plain-text coordinate triplets (row col value, 17 significant digits).
void write_matrix_triplets(const SparseSym& K, std::ostream& os);

}  // namespace gfem

#endif
