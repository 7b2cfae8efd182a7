#include "gfem/pdas.hpp"

#include <Eigen/SparseCholesky>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "gfem/errors.hpp"

namespace gfem {

Eigen::VectorXd solve_fixed(const SparseSym& K, const Eigen::VectorXd& F,
                            const std::vector<std::pair<int, double>>& fixed) {
  const int n = static_cast<int>(K.rows());
  if (F.size() != n) throw std::invalid_argument("solve_fixed: dimension mismatch");

  Eigen::VectorXd u = Eigen::VectorXd::Zero(n);
  std::vector<int> to_free(static_cast<size_t>(n), -1);
  std::vector<char> is_fixed(static_cast<size_t>(n), 0);
  for (const auto& [id, val] : fixed) {
    is_fixed[static_cast<size_t>(id)] = 1;
    u[id] = val;
  }
  int nfree = 0;
  for (int i = 0; i < n; ++i)
    if (!is_fixed[static_cast<size_t>(i)]) to_free[static_cast<size_t>(i)] = nfree++;
  if (nfree == 0) return u;

  // reduced system K_ff x = F_f - K_fc u_c
  Eigen::VectorXd rhs(nfree);
  for (int i = 0; i < n; ++i)
    if (to_free[static_cast<size_t>(i)] >= 0) rhs[to_free[static_cast<size_t>(i)]] = F[i];

  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(static_cast<size_t>(K.nonZeros()));
  for (int col = 0; col < K.outerSize(); ++col) {
    const int fc = to_free[static_cast<size_t>(col)];
    for (SparseSym::InnerIterator it(K, col); it; ++it) {
      const int fr = to_free[static_cast<size_t>(it.row())];
      if (fc >= 0 && fr >= 0) trips.emplace_back(fr, fc, it.value());
      else if (fc < 0 && fr >= 0) rhs[fr] -= it.value() * u[col];
    }
  }
  SparseSym Kff(nfree, nfree);
  Kff.setFromTriplets(trips.begin(), trips.end());

  Eigen::SimplicialLDLT<SparseSym> solver(Kff);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("solve_fixed: factorization failed (singular reduced system)");
  Eigen::VectorXd x = solver.solve(rhs);

  // iterative refinement down to the roundoff floor of the factorization
  const double scale0 = std::max(1.0, rhs.lpNorm<Eigen::Infinity>());
  for (int pass = 0; pass < 5; ++pass) {
    const Eigen::VectorXd resid = rhs - Kff * x;
    if (resid.lpNorm<Eigen::Infinity>() <=
        1e-13 * std::max(scale0, (Kff * x).lpNorm<Eigen::Infinity>()))
      break;
    x += solver.solve(resid);
  }

  const double scale = std::max({1.0, rhs.lpNorm<Eigen::Infinity>(),
                                 (Kff * x).lpNorm<Eigen::Infinity>()});
  if (!((Kff * x - rhs).lpNorm<Eigen::Infinity>() <= 1e-10 * scale))
    throw std::runtime_error("solve_fixed: residual too large (singular reduced system?)");

  for (int i = 0; i < n; ++i)
    if (to_free[static_cast<size_t>(i)] >= 0) u[i] = x[to_free[static_cast<size_t>(i)]];
  return u;
}

namespace {

// 0 = inactive, 1 = lower contact, 2 = upper contact
using ActiveState = std::vector<signed char>;

KktReport evaluate_kkt(const SparseSym& K, const Eigen::VectorXd& F,
                       const BoxConstraints& bc, const Eigen::VectorXd& u,
                       const Eigen::VectorXd& lambda, const ActiveState& state,
                       double tol) {
  KktReport rep;
  rep.tol = tol;
  const Eigen::VectorXd r = K * u - F;
  // componentwise backward-error scale |K||u| for the force-balance residual
  Eigen::VectorXd cancel = Eigen::VectorXd::Zero(u.size());
  for (int col = 0; col < K.outerSize(); ++col)
    for (SparseSym::InnerIterator it(K, col); it; ++it)
      cancel[it.row()] += std::abs(it.value() * u[col]);
  rep.force_scale = std::max({1.0, F.lpNorm<Eigen::Infinity>(),
                              cancel.lpNorm<Eigen::Infinity>()});
  rep.solution_scale = std::max(1.0, u.lpNorm<Eigen::Infinity>());

  std::vector<char> constrained(static_cast<size_t>(u.size()), 0);
  for (int k = 0; k < bc.count(); ++k) {
    const int id = bc.dofs[static_cast<size_t>(k)];
    constrained[static_cast<size_t>(id)] = 1;
    const double ui = u[id];
    const double slack_lo = ui - bc.lower[k];
    const double slack_up = bc.upper[k] - ui;
    if (std::isfinite(bc.lower[k]))
      rep.solution_scale = std::max(rep.solution_scale, std::abs(bc.lower[k]));
    if (std::isfinite(bc.upper[k]))
      rep.solution_scale = std::max(rep.solution_scale, std::abs(bc.upper[k]));
    rep.feasibility = std::max({rep.feasibility, -slack_lo, -slack_up});
    const double li = lambda[k];
    if (state[static_cast<size_t>(k)] == 1) rep.multiplier_sign = std::max(rep.multiplier_sign, li);
    if (state[static_cast<size_t>(k)] == 2) rep.multiplier_sign = std::max(rep.multiplier_sign, -li);
    if (state[static_cast<size_t>(k)] == 0)
      rep.stationarity = std::max(rep.stationarity, std::abs(r[id]));
    else
      rep.stationarity = std::max(rep.stationarity, std::abs(r[id] + li));
    const double slack = std::min(std::abs(slack_lo), std::abs(slack_up));
    rep.complementarity = std::max(rep.complementarity, std::abs(li) * slack);
  }
  std::vector<char> pinned(static_cast<size_t>(u.size()), 0);
  for (const auto& [id, val] : bc.fixed) {
    pinned[static_cast<size_t>(id)] = 1;
    rep.feasibility = std::max(rep.feasibility, std::abs(u[id] - val));
  }
  for (int i = 0; i < u.size(); ++i)
    if (!constrained[static_cast<size_t>(i)] && !pinned[static_cast<size_t>(i)])
      rep.stationarity = std::max(rep.stationarity, std::abs(r[i]));

  rep.pass = rep.relative() <= tol;
  return rep;
}

}  // namespace

double KktReport::relative() const {
  return std::max({feasibility / solution_scale, stationarity / force_scale,
                   multiplier_sign / force_scale,
                   complementarity / (force_scale * solution_scale)});
}

PdasResult pdas(const SparseSym& K, const Eigen::VectorXd& F,
                const BoxConstraints& bc, const PdasOptions& opts) {
  const int nc = bc.count();
  PdasResult res;

  // complementarity parameter in absolute units
  double cdiag = 0.0;
  for (int k = 0; k < nc; ++k) cdiag += K.coeff(bc.dofs[static_cast<size_t>(k)],
                                                bc.dofs[static_cast<size_t>(k)]);
  double cabs = opts.c * (nc > 0 ? cdiag / nc : 1.0);

  ActiveState state(static_cast<size_t>(nc), 0);
  std::vector<int> dof_to_slot(static_cast<size_t>(K.rows()), -1);
  for (int k = 0; k < nc; ++k) dof_to_slot[static_cast<size_t>(bc.dofs[static_cast<size_t>(k)])] = k;
  for (int id : opts.initial_lower)
    if (dof_to_slot[static_cast<size_t>(id)] >= 0) state[static_cast<size_t>(dof_to_slot[static_cast<size_t>(id)])] = 1;
  for (int id : opts.initial_upper)
    if (dof_to_slot[static_cast<size_t>(id)] >= 0) state[static_cast<size_t>(dof_to_slot[static_cast<size_t>(id)])] = 2;

  std::set<ActiveState> seen;
  bool c_bumped = false;
  std::vector<std::pair<int, double>> pins;

  for (int iter = 1; iter <= opts.max_iterations; ++iter) {
    // solve with the current contact sets pinned to their bounds
    pins.assign(bc.fixed.begin(), bc.fixed.end());
    for (int k = 0; k < nc; ++k) {
      if (state[static_cast<size_t>(k)] == 1)
        pins.emplace_back(bc.dofs[static_cast<size_t>(k)], bc.lower[k]);
      else if (state[static_cast<size_t>(k)] == 2)
        pins.emplace_back(bc.dofs[static_cast<size_t>(k)], bc.upper[k]);
    }
    std::sort(pins.begin(), pins.end());
    res.solution = solve_fixed(K, F, pins);

    // multipliers lambda = F - K u on the active sets
    const Eigen::VectorXd r = F - K * res.solution;
    res.multipliers.setZero(nc);
    for (int k = 0; k < nc; ++k)
      if (state[static_cast<size_t>(k)] != 0)
        res.multipliers[k] = r[bc.dofs[static_cast<size_t>(k)]];

    const KktReport rep =
        evaluate_kkt(K, F, bc, res.solution, res.multipliers, state, opts.tolerance);
    res.kkt = rep;
    res.iterations = iter;

    // next active sets
    ActiveState next(static_cast<size_t>(nc), 0);
    for (int k = 0; k < nc; ++k) {
      const int id = bc.dofs[static_cast<size_t>(k)];
      const double lam = state[static_cast<size_t>(k)] != 0 ? res.multipliers[k] : r[id];
      const double ui = res.solution[id];
      if (std::isfinite(bc.lower[k]) && lam + cabs * (ui - bc.lower[k]) < 0.0)
        next[static_cast<size_t>(k)] = 1;
      else if (std::isfinite(bc.upper[k]) && lam + cabs * (ui - bc.upper[k]) > 0.0)
        next[static_cast<size_t>(k)] = 2;
    }

    res.history.push_back({iter,
                           static_cast<int>(std::count(state.begin(), state.end(), 1)),
                           static_cast<int>(std::count(state.begin(), state.end(), 2)),
                           rep.relative()});

    if (next == state && rep.pass) {
      res.converged = true;
      break;
    }
    const bool stagnated = (next == state) || !seen.insert(next).second;
    if (stagnated) {
      if (!c_bumped) {
        c_bumped = true;
        cabs *= 10.0;
        seen.clear();
      } else {
        break;  // cycling twice: report nonconvergence
      }
    }
    state = next;
  }

  res.active_lower.clear();
  res.active_upper.clear();
  for (int k = 0; k < nc; ++k) {
    if (state[static_cast<size_t>(k)] == 1) res.active_lower.push_back(bc.dofs[static_cast<size_t>(k)]);
    if (state[static_cast<size_t>(k)] == 2) res.active_upper.push_back(bc.dofs[static_cast<size_t>(k)]);
  }
  return res;
}

KktReport check_kkt(const SparseSym& K, const Eigen::VectorXd& F,
                    const BoxConstraints& bc, const PdasResult& result, double tol) {
  ActiveState state(static_cast<size_t>(bc.count()), 0);
  std::vector<int> dof_to_slot(static_cast<size_t>(K.rows()), -1);
  for (int k = 0; k < bc.count(); ++k)
    dof_to_slot[static_cast<size_t>(bc.dofs[static_cast<size_t>(k)])] = k;
  for (int id : result.active_lower) {
    const int k = dof_to_slot[static_cast<size_t>(id)];
    if (k >= 0) state[static_cast<size_t>(k)] = 1;
  }
  for (int id : result.active_upper) {
    const int k = dof_to_slot[static_cast<size_t>(id)];
    if (k >= 0) state[static_cast<size_t>(k)] = 2;
  }
  return evaluate_kkt(K, F, bc, result.solution, result.multipliers, state, tol);
}

}  // namespace gfem
