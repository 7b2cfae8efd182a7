#ifndef GFEM_PDAS_HPP
#define GFEM_PDAS_HPP

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <vector>

#include "gfem/constraints.hpp"

namespace gfem {

using SparseSym = Eigen::SparseMatrix<double>;

/// Direct solve of K u = F with the listed degrees of freedom pinned to
/// prescribed values; the reduced matrix must be symmetric positive definite.
/// One step of iterative refinement keeps the free-equation residual below
/// 1e-10 relative, otherwise a singularity error is thrown.
Eigen::VectorXd solve_fixed(const SparseSym& K, const Eigen::VectorXd& F,
                            const std::vector<std::pair<int, double>>& fixed);

struct PdasOptions {
  /// Complementarity parameter, in units of the mean diagonal of K over the
  /// constrained dofs.
  double c = 1.0;
  /// Cold starts on fine levels creep through many marginal contact nodes
  /// when the contact multiplier degenerates, so the cap is generous.
  int max_iterations = 300;
  double tolerance = 1e-10;        // relative KKT residual
  std::vector<int> initial_lower;  // warm-start active sets (dof ids)
  std::vector<int> initial_upper;
};

struct KktReport {
  double feasibility = 0.0;      // max bound/fixed-value violation (solution units)
  double stationarity = 0.0;     // max |(Ku-F)_i| off the active sets (force units)
  double multiplier_sign = 0.0;  // max wrong-signed multiplier magnitude
  double complementarity = 0.0;  // max |lambda_i * slack_i|
  double solution_scale = 1.0;   // max(1, |u|_inf, finite bounds)
  double force_scale = 1.0;      // max(1, |F|_inf, || |K||u| ||_inf)
  double tol = 0.0;
  bool pass = false;
  /// Largest violation measured in its own scale.
  double relative() const;
};

struct PdasIterationLog {
  int iteration;
  int lower_active;
  int upper_active;
  double kkt_residual;
};

struct PdasResult {
  Eigen::VectorXd solution;
  /// lambda = F - K u per constrained dof (zero off the active sets).
  Eigen::VectorXd multipliers;
  std::vector<int> active_lower;  // dof ids, ascending
  std::vector<int> active_upper;
  std::vector<PdasIterationLog> history;
  int iterations = 0;
  bool converged = false;
  KktReport kkt;
};

/// Primal-dual active set iteration for the box-constrained energy
/// minimization: fix the guessed contact sets to their bounds, solve the
/// reduced SPD system, recover multipliers lambda = F - K u, and update
///   A- = { lambda + c (u - psi1) < 0 },  A+ = { lambda + c (u - psi2) > 0 }
/// until the sets repeat with a passing KKT residual. Starts from the empty
/// active set unless warm-start sets are given. On stagnation the
/// complementarity parameter is raised tenfold once before giving up
/// (converged = false).
PdasResult pdas(const SparseSym& K, const Eigen::VectorXd& F,
                const BoxConstraints& constraints, const PdasOptions& opts = {});

/// Feasibility, stationarity, multiplier signs (lambda <= 0 on the lower
/// contact set, >= 0 on the upper), and complementarity of a result, all
/// relative to scale = max(1, |F|_inf, |Ku|_inf).
KktReport check_kkt(const SparseSym& K, const Eigen::VectorXd& F,
                    const BoxConstraints& constraints, const PdasResult& result,
                    double tol);

}  // namespace gfem

#endif
