#include "vtorus/simplex_lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace vtorus::lp {

namespace {

// Solve B^T pi = rhs reusing the LU factors of B (P B = L U).
Eigen::VectorXd solve_transposed(const Eigen::PartialPivLU<Eigen::MatrixXd>& lu,
                                 const Eigen::VectorXd& rhs) {
  Eigen::VectorXd w = lu.matrixLU().triangularView<Eigen::Upper>().transpose().solve(rhs);
  Eigen::VectorXd v = lu.matrixLU().triangularView<Eigen::UnitLower>().transpose().solve(w);
  return lu.permutationP().transpose() * v;
}

struct Workspace {
  const ColumnSource& G;
  const Eigen::VectorXd& b;
  Eigen::Index nr;
  Eigen::Index nc;
  Eigen::VectorXd art_sign;           // artificial column i is art_sign(i) * e_i
  std::vector<Eigen::Index> basis;    // size nr; values in [0, nc + nr)
  Eigen::MatrixXd B;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu;
  Eigen::VectorXd x;                  // basic values
  long iterations = 0;

  bool is_artificial(Eigen::Index j) const { return j >= nc; }

  Eigen::VectorXd column_of(Eigen::Index j) const {
    if (!is_artificial(j)) return G.column(j);
    Eigen::VectorXd e = Eigen::VectorXd::Zero(nr);
    e(j - nc) = art_sign(j - nc);
    return e;
  }

  // returns false when the basis matrix is numerically singular
  bool refactor() {
    for (Eigen::Index k = 0; k < nr; ++k) B.col(k) = column_of(basis[static_cast<size_t>(k)]);
    lu.compute(B);
    const auto diag = lu.matrixLU().diagonal().cwiseAbs();
    const double dmax = diag.maxCoeff();
    if (!(dmax > 0) || diag.minCoeff() < 1e-13 * dmax) return false;
    x = lu.solve(b);
    return true;
  }
};

enum class PhaseOutcome { Optimal, Unbounded, IterationLimit, SingularBasis };

// Runs simplex iterations for one phase.  cost_real: costs of the real
// columns; art_cost: cost per artificial.  When guard_artificials is set the
// ratio test evicts basic artificials instead of letting them grow.
PhaseOutcome run_phase(Workspace& ws, const Eigen::VectorXd& cost_real, double art_cost,
                       bool allow_artificial_entering, bool guard_artificials,
                       const Options& opt) {
  const Eigen::Index nr = ws.nr;
  long degenerate_run = 0;
  const long bland_threshold = 3 * static_cast<long>(nr) + 20;

  while (true) {
    if (ws.iterations >= opt.max_iterations) return PhaseOutcome::IterationLimit;
    if (!ws.refactor()) return PhaseOutcome::SingularBasis;

    Eigen::VectorXd c_basis(nr);
    for (Eigen::Index k = 0; k < nr; ++k) {
      const Eigen::Index j = ws.basis[static_cast<size_t>(k)];
      c_basis(k) = ws.is_artificial(j) ? art_cost : cost_real(j);
    }
    const Eigen::VectorXd pi = solve_transposed(ws.lu, c_basis);

    // pricing
    const Eigen::VectorXd dots = ws.G.dots(pi);
    const bool bland = degenerate_run > bland_threshold;
    Eigen::Index enter = -1;
    double best = -opt.reduced_cost_tol;
    for (Eigen::Index j = 0; j < ws.nc; ++j) {
      const double d = cost_real(j) - dots(j);
      if (d < best) {
        enter = j;
        if (bland) break;
        best = d;
      }
    }
    if (allow_artificial_entering && (enter == -1 || !bland)) {
      for (Eigen::Index i = 0; i < nr; ++i) {
        const double d = art_cost - ws.art_sign(i) * pi(i);
        if (d < best) {
          enter = ws.nc + i;
          if (bland) break;
          best = d;
        }
      }
    }
    if (enter == -1) return PhaseOutcome::Optimal;

    const Eigen::VectorXd u = ws.lu.solve(ws.column_of(enter));

    // ratio test
    Eigen::Index leave = -1;
    double t_best = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < nr; ++i) {
      const double xi = std::max(ws.x(i), 0.0);
      const bool basic_art = ws.is_artificial(ws.basis[static_cast<size_t>(i)]);
      double ratio;
      if (u(i) > opt.pivot_tol) {
        ratio = xi / u(i);
      } else if (guard_artificials && basic_art && u(i) < -opt.pivot_tol) {
        ratio = 0.0;  // an artificial may never grow back above zero
      } else {
        continue;
      }
      if (ratio < t_best) {
        t_best = ratio;
        leave = i;
      } else if (bland && ratio == t_best && leave != -1 &&
                 ws.basis[static_cast<size_t>(i)] < ws.basis[static_cast<size_t>(leave)]) {
        leave = i;
      }
    }
    if (leave == -1) return PhaseOutcome::Unbounded;

    degenerate_run = t_best <= opt.feasibility_tol ? degenerate_run + 1 : 0;
    ws.basis[static_cast<size_t>(leave)] = enter;
    ++ws.iterations;
  }
}

}  // namespace

Solution solve_equality_form(const ColumnSource& G, const Eigen::VectorXd& c,
                             const Eigen::VectorXd& b, const Options& opt) {
  const Eigen::Index nr = G.rows();
  const Eigen::Index nc = G.cols();
  if (c.size() != nc || b.size() != nr) {
    throw std::invalid_argument("solve_equality_form: dimension mismatch");
  }

  Workspace ws{G, b, nr, nc, Eigen::VectorXd(nr), {}, Eigen::MatrixXd(nr, nr), {}, {}, 0};
  for (Eigen::Index i = 0; i < nr; ++i) ws.art_sign(i) = b(i) >= 0.0 ? 1.0 : -1.0;

  Solution sol;
  bool restarted = false;
  bool warm = !opt.warm_basis.empty();
  if (warm && static_cast<Eigen::Index>(opt.warm_basis.size()) != nr) {
    throw std::invalid_argument("solve_equality_form: warm basis has wrong size");
  }

  while (true) {
    bool need_phase1 = true;
    if (warm) {
      ws.basis = opt.warm_basis;
      if (ws.refactor() && ws.x.minCoeff() > -opt.feasibility_tol) {
        need_phase1 = false;
      }
      warm = false;  // at most one attempt
    }

    if (need_phase1) {
      ws.basis.resize(static_cast<size_t>(nr));
      for (Eigen::Index i = 0; i < nr; ++i) ws.basis[static_cast<size_t>(i)] = nc + i;
      const Eigen::VectorXd zero_cost = Eigen::VectorXd::Zero(nc);
      const PhaseOutcome p1 = run_phase(ws, zero_cost, 1.0, false, false, opt);
      if (p1 == PhaseOutcome::IterationLimit) {
        sol.status = SolveStatus::IterationLimit;
        sol.iterations = ws.iterations;
        return sol;
      }
      if (p1 == PhaseOutcome::SingularBasis) {
        throw std::runtime_error("solve_equality_form: singular basis in phase 1");
      }
      // p1 Unbounded cannot happen: phase-1 objective is bounded below by 0
      double infeas = 0.0;
      for (Eigen::Index i = 0; i < nr; ++i) {
        if (ws.is_artificial(ws.basis[static_cast<size_t>(i)])) {
          infeas += std::max(ws.x(i), 0.0);
        }
      }
      if (infeas > opt.feasibility_tol * (1.0 + b.cwiseAbs().sum())) {
        sol.status = SolveStatus::Infeasible;
        sol.iterations = ws.iterations;
        return sol;
      }
    }

    const PhaseOutcome p2 = run_phase(ws, c, 0.0, false, true, opt);
    if (p2 == PhaseOutcome::SingularBasis) {
      if (restarted) {
        throw std::runtime_error("solve_equality_form: singular basis after restart");
      }
      restarted = true;
      continue;  // cold restart through phase 1
    }
    if (p2 == PhaseOutcome::IterationLimit) {
      sol.status = SolveStatus::IterationLimit;
      sol.iterations = ws.iterations;
      return sol;
    }
    if (p2 == PhaseOutcome::Unbounded) {
      sol.status = SolveStatus::Unbounded;
      sol.iterations = ws.iterations;
      return sol;
    }

    // optimal
    Eigen::VectorXd c_basis(nr);
    for (Eigen::Index k = 0; k < nr; ++k) {
      const Eigen::Index j = ws.basis[static_cast<size_t>(k)];
      c_basis(k) = ws.is_artificial(j) ? 0.0 : c(j);
    }
    sol.status = SolveStatus::Optimal;
    sol.objective = c_basis.dot(ws.x);
    sol.multipliers = solve_transposed(ws.lu, c_basis);
    sol.basis = ws.basis;
    sol.basic_values = ws.x;
    sol.iterations = ws.iterations;
    return sol;
  }
}

}  // namespace vtorus::lp
