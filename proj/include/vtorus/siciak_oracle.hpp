#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

#include "vtorus/convex_geometry.hpp"
#include "vtorus/simplex_lp.hpp"
#include "vtorus/torus_variety.hpp"

namespace vtorus {

/// Configuration of the polynomial sup-norm envelope estimator.
struct OracleConfig {
  OracleConfig(int degree_, DegreePolytope polytope_)
      : degree(degree_), polytope(std::move(polytope_)) {}

  int degree;                    // k: polynomials from poly(k * polytope)
  DegreePolytope polytope;       // degree notion (simplex = total degree)
  int directions = 32;           // m: polygonal modulus discretization, >= 8
  int objective_directions = 16; // m0: objective phase grid
  double lp_tolerance = 1e-9;
};

struct OracleEstimate {
  double lower_value = 0;    // raw_value + (1/k) log cos(pi/m)
  double raw_value = 0;      // (1/k) log of the best LP objective
  int degree = 0;
  int basis_size = 0;
  long solver_iterations = 0;
  double wall_time_ms = 0;
  /// Optimal coefficients, already deflated by cos(pi/m) so the polynomial
  /// satisfies the true modulus constraints at the samples.
  Eigen::VectorXcd coefficients;
  std::vector<Eigen::VectorXi> exponents;
};

/// The sample set cannot pin the polynomial space down; the envelope LP is
/// unbounded.  Densify the samples.
class OracleUnboundedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SolverStallError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lower estimate of the extremal function at z: maximize |p(z)| over
/// p in poly(k P) with the polygonal sup-norm constraints
/// Re(e^{i theta_j} p(x)) <= 1 at every sample x, then deflate by cos(pi/m)
/// so the estimate comes from a genuinely feasible polynomial.
OracleEstimate lp_envelope(const OracleConfig& cfg,
                           const std::vector<Eigen::VectorXcd>& K_samples,
                           const Eigen::VectorXcd& z);

/// (1/k) log|T_k(z)| by the three-term recurrence: the exact classical
/// lower bound for the interval envelope.
double chebyshev_oracle(Complex z, int k);

/// lp_envelope per degree, ascending.
std::vector<OracleEstimate> convergence_sweep(const OracleConfig& base,
                                              const std::vector<Eigen::VectorXcd>& K_samples,
                                              const Eigen::VectorXcd& z,
                                              const std::vector<int>& degrees);

std::string oracle_report_json(const OracleEstimate& e);

/// Evaluate the deflated optimal polynomial at a point.
Complex evaluate_polynomial(const OracleEstimate& e, const Eigen::VectorXcd& x);

// Deterministic sample grids for the supported targets (constraint sampling
// is never randomized, so runs reproduce).
std::vector<Eigen::VectorXcd> sample_interval(int n);
std::vector<Eigen::VectorXcd> sample_unit_simplex(int grid);
std::vector<Eigen::VectorXcd> sample_trapezoid(const TorusParams& p, int n1, int n2);
std::vector<Eigen::VectorXcd> sample_pi_e(const TorusParams& p, int n1, int n2);
std::vector<Eigen::VectorXcd> sample_torus_points(const TorusParams& p, int n_theta, int n_phi);

}  // namespace vtorus
