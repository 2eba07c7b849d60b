#pragma once

#include <Eigen/Dense>
#include <vector>

namespace vtorus::lp {

/// Columns of the constraint matrix G, presented implicitly so structured
/// problems never materialize G.
class ColumnSource {
 public:
  virtual ~ColumnSource() = default;
  virtual Eigen::Index rows() const = 0;
  virtual Eigen::Index cols() const = 0;
  virtual Eigen::VectorXd column(Eigen::Index j) const = 0;
  /// dots(pi)[j] = <G_j, pi> for every column j.
  virtual Eigen::VectorXd dots(const Eigen::VectorXd& pi) const = 0;
};

class DenseColumns final : public ColumnSource {
 public:
  explicit DenseColumns(Eigen::MatrixXd g) : g_(std::move(g)) {}
  Eigen::Index rows() const override { return g_.rows(); }
  Eigen::Index cols() const override { return g_.cols(); }
  Eigen::VectorXd column(Eigen::Index j) const override { return g_.col(j); }
  Eigen::VectorXd dots(const Eigen::VectorXd& pi) const override { return g_.transpose() * pi; }

 private:
  Eigen::MatrixXd g_;
};

enum class SolveStatus { Optimal, Infeasible, Unbounded, IterationLimit };

struct Options {
  double feasibility_tol = 1e-9;
  double pivot_tol = 1e-10;
  double reduced_cost_tol = 1e-9;
  long max_iterations = 200000;
  /// Optional starting basis (column indices, one per row); must be
  /// primal feasible for the same G and b.  Skips phase 1.
  std::vector<Eigen::Index> warm_basis;
};

struct Solution {
  SolveStatus status = SolveStatus::Infeasible;
  double objective = 0.0;
  /// Simplex multipliers pi of the final basis: G_B^T pi = c_B.  For the
  /// dual of a row-constrained maximization these are the primal solution.
  Eigen::VectorXd multipliers;
  std::vector<Eigen::Index> basis;
  Eigen::VectorXd basic_values;
  long iterations = 0;
};

/// min c^T y  subject to  G y = b,  y >= 0.
///
/// Two-phase revised simplex, dense LU refactorization each step.  Pivot
/// selection is Dantzig with lowest-index ties, switching to Bland's rule
/// after a run of degenerate steps, so runs are deterministic.
Solution solve_equality_form(const ColumnSource& G, const Eigen::VectorXd& c,
                             const Eigen::VectorXd& b, const Options& opt = {});

}  // namespace vtorus::lp
