#ifndef GFEM_CONVERGENCE_HPP
#define GFEM_CONVERGENCE_HPP

#include <functional>
#include <optional>
#include <vector>

#include "gfem/assembly.hpp"
#include "gfem/examples.hpp"
#include "gfem/pdas.hpp"
#include "gfem/space.hpp"

namespace gfem {

/// Mesh parameter h_j of the level-j cover: L/(2^j - delta) on a rectangle of
/// side L, 2a/(2^j + 1 - delta) on the L-shape.
double mesh_parameter(const DomainSpec& domain, int level, double delta);

/// Pairwise log-ratio convergence rates between consecutive entries,
/// beta_k = ln(e_{k-1}/e_k) / ln(h_{k-1}/h_k); the first entry and any pair
/// with a zero error are reported as missing.
std::vector<std::optional<double>> rates(const std::vector<double>& errors,
                                         const std::vector<double>& h);

/// Interior pointwise-evaluation nodes p with u(p) - psi(p) <= threshold,
/// sorted lexicographically (y, then x).
std::vector<Point> coincidence_set(const GfemSpace& space, const Eigen::VectorXd& u,
                                   const SmoothFunction& psi, double threshold);

struct LevelRecord {
  int level = 0;
  double h = 0.0;
  int dofs = 0;
  std::optional<double> energy_error;      // |e_j|_j / |u_J|_J
  std::optional<double> energy_error_abs;  // |e_j|_j
  std::optional<double> beta_h;
  std::optional<double> linf_error;
  std::optional<double> beta_inf;
  int pdas_iterations = 0;
  double kkt_residual = 0.0;
  bool kkt_pass = false;
  double seconds = 0.0;
  std::vector<Point> coincidence;
  /// Example 1 only: energies of the solve and of the interpolated exact
  /// solution (G(u_h) <= G(Pi_h u) by minimality).
  std::optional<double> energy_uh;
  std::optional<double> energy_interp;
};

struct ConvergenceReport {
  int example_id = 0;
  SpaceKind space = SpaceKind::Q2;
  double delta = 1.0 / 3.0;
  int rule_order = 0;
  PdasOptions pdas_options;
  bool warm_start = false;
  int normalization_level = 0;
  double normalization = 1.0;  // |u_J|_J of the finest computed level
  bool l_element_n8_moved = false;
  std::vector<LevelRecord> rows;
};

struct RunOptions {
  double delta = 1.0 / 3.0;
  SpaceKind space = SpaceKind::Q2;
  int rule_order = 0;  // 0: default for the space
  PdasOptions pdas;
  bool warm_start = false;
  /// Called after each level's assembly (level, stiffness matrix).
  std::function<void(int, const SparseSym&)> matrix_sink;
  /// Called after each level's solve (level, solver run log).
  std::function<void(int, const std::vector<PdasIterationLog>&)> pdas_log_sink;
};

/// Runs the level sweep: build space, assemble, solve the obstacle problem,
/// measure errors (against the exact solution when available, otherwise
/// against the interpolated previous-level solution), extract coincidence
/// sets and rates. Throws nonconvergence_error (annotated with the level) if
/// the active-set solver fails.
ConvergenceReport run_convergence(const ExampleSpec& example,
                                  const std::vector<int>& levels,
                                  const RunOptions& options = {});

}  // namespace gfem

#endif
