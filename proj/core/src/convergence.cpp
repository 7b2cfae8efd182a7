#include "gfem/convergence.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <memory>
#include <sstream>

#include "gfem/constraints.hpp"
#include "gfem/errors.hpp"
#include "gfem/interpolate.hpp"

namespace gfem {

double mesh_parameter(const DomainSpec& domain, int level, double delta) {
  const int m = (domain.kind() == DomainSpec::Kind::LShape) ? (1 << level) + 1
                                                            : (1 << level);
  return domain.bounding_box().width() / (m - delta);
}

std::vector<std::optional<double>> rates(const std::vector<double>& errors,
                                         const std::vector<double>& h) {
  if (errors.size() != h.size()) throw std::invalid_argument("rates: length mismatch");
  for (double hi : h)
    if (!(hi > 0.0)) throw std::invalid_argument("rates: h must be positive");
  std::vector<std::optional<double>> out(errors.size());
  for (size_t k = 1; k < errors.size(); ++k) {
    if (errors[k - 1] <= 0.0 || errors[k] <= 0.0) continue;  // undefined, leave missing
    out[k] = std::log(errors[k - 1] / errors[k]) / std::log(h[k - 1] / h[k]);
  }
  return out;
}

std::vector<Point> coincidence_set(const GfemSpace& space, const Eigen::VectorXd& u,
                                   const SmoothFunction& psi, double threshold) {
  if (threshold < 0.0) throw std::invalid_argument("coincidence_set: threshold >= 0");
  std::vector<Point> pts;
  for (int id : space.dofs().interior_value_dofs()) {
    const Point p = space.dofs()[id].node;
    if (u[id] - psi.value(p) <= threshold) pts.push_back(p);
  }
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
  });
  return pts;
}

namespace {

struct LevelState {
  std::unique_ptr<GfemSpace> space;
  Eigen::VectorXd u;
};

std::vector<int> warm_start_lower(const GfemSpace& fine, const GfemSpace& coarse,
                                  const Eigen::VectorXd& coarse_u,
                                  const SmoothFunction& psi) {
  std::vector<int> active;
  for (int id : fine.dofs().interior_value_dofs()) {
    const Point p = fine.dofs()[id].node;
    if (coarse.evaluate(coarse_u, p, 0, 0) - psi.value(p) <= 0.0) active.push_back(id);
  }
  return active;
}

}  // namespace

ConvergenceReport run_convergence(const ExampleSpec& example,
                                  const std::vector<int>& levels,
                                  const RunOptions& options) {
  if (levels.empty()) throw std::invalid_argument("run_convergence: empty level list");
  for (size_t k = 0; k < levels.size(); ++k) {
    if (levels[k] < 1 || (k > 0 && levels[k] <= levels[k - 1]))
      throw std::invalid_argument("run_convergence: levels must be ascending and >= 1");
  }

  ConvergenceReport report;
  report.example_id = example.id;
  report.space = options.space;
  report.delta = options.delta;
  report.rule_order =
      options.rule_order ? options.rule_order : default_rule_order(options.space);
  report.pdas_options = options.pdas;
  report.warm_start = options.warm_start;

  const FlatTopParams params{options.delta, options.delta};
  LevelState prev;
  double norm_ref = 0.0;

  for (int level : levels) {
    const auto t0 = std::chrono::steady_clock::now();
    auto space = std::make_unique<GfemSpace>(
        GfemSpace::build(example.domain, level, params, options.space));
    const SparseSym K = assemble_stiffness(*space, report.rule_order);
    const Eigen::VectorXd F = assemble_load(*space, example.f, report.rule_order);
    if (options.matrix_sink) options.matrix_sink(level, K);

    const BoxConstraints bc = build_constraints(
        *space, &example.psi, nullptr, example.g ? &*example.g : nullptr);

    PdasOptions popts = options.pdas;
    if (options.warm_start && prev.space)
      popts.initial_lower = warm_start_lower(*space, *prev.space, prev.u, example.psi);

    const PdasResult sol = pdas(K, F, bc, popts);
    if (options.pdas_log_sink) options.pdas_log_sink(level, sol.history);
    if (!sol.converged) {
      std::ostringstream os;
      os << "example " << example.id << " level " << level
         << ": active-set solver did not converge within "
         << popts.max_iterations << " iterations (KKT residual "
         << sol.kkt.relative() << ")";
      throw nonconvergence_error(os.str());
    }

    LevelRecord row;
    row.level = level;
    row.h = mesh_parameter(example.domain, level, options.delta);
    row.dofs = space->dof_count();
    row.pdas_iterations = sol.iterations;
    row.kkt_pass = sol.kkt.pass;
    row.kkt_residual = sol.kkt.relative();

    // error against the exact solution, or against the interpolated coarse
    // solution when no exact solution exists
    std::optional<Eigen::VectorXd> reference;
    if (example.exact) {
      reference = interpolate(*space, *example.exact);
      row.energy_uh = energy_value(K, F, sol.solution);
      row.energy_interp = energy_value(K, F, *reference);
    } else if (prev.space) {
      reference = interpolate(*space, prev.space->field_function(prev.u));
    }
    if (reference) {
      const Eigen::VectorXd e = *reference - sol.solution;
      row.energy_error_abs = std::sqrt(std::max(0.0, e.dot(K * e)));
      double linf = 0.0;
      for (int id : space->dofs().interior_value_dofs())
        linf = std::max(linf, std::abs(e[id]));
      row.linf_error = linf;
      row.coincidence = coincidence_set(*space, sol.solution, example.psi, linf);
    }

    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report.rows.push_back(std::move(row));

    // Laplacian-form energy norm of the solve; identical to sqrt(u'Ku) for
    // clamped data, and the normalization convention behind the reference
    // tables for nonhomogeneous boundary data.
    norm_ref = field_laplacian_norm(*space, sol.solution, report.rule_order);
    report.normalization_level = level;
    if (example.domain.kind() == DomainSpec::Kind::LShape)
      report.l_element_n8_moved = space->l_element_n8_moved();

    prev.space = std::move(space);
    prev.u = sol.solution;
  }

  report.normalization = norm_ref;
  for (auto& row : report.rows)
    if (row.energy_error_abs)
      row.energy_error = *row.energy_error_abs / norm_ref;

  // rates over the rows that carry errors
  std::vector<double> errs, hs, linfs;
  std::vector<size_t> idx;
  for (size_t k = 0; k < report.rows.size(); ++k) {
    const auto& row = report.rows[k];
    if (row.energy_error) {
      errs.push_back(*row.energy_error);
      linfs.push_back(*row.linf_error);
      hs.push_back(row.h);
      idx.push_back(k);
    }
  }
  const auto beta_h = rates(errs, hs);
  const auto beta_inf = rates(linfs, hs);
  for (size_t k = 0; k < idx.size(); ++k) {
    report.rows[idx[k]].beta_h = beta_h[k];
    report.rows[idx[k]].beta_inf = beta_inf[k];
  }
  return report;
}

}  // namespace gfem
