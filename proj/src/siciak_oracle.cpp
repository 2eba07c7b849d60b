#include "vtorus/siciak_oracle.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace vtorus {

namespace {

Complex monomial_value(const Eigen::VectorXcd& x, const Eigen::VectorXi& alpha) {
  Complex v(1.0, 0.0);
  for (Eigen::Index d = 0; d < alpha.size(); ++d) {
    Complex base = x(d);
    for (int e = alpha(d); e > 0; --e) v *= base;
  }
  return v;
}

/// Constraint rows Re(e^{i theta_t} p(x_s)) <= 1 presented as columns of the
/// dual system.  Row (s,t) of the primal matrix is
/// cos(theta_t) * P_s - sin(theta_t) * Q_s with P, Q the theta = 0 and
/// derivative blocks, so pricing costs two S x 2N products instead of one
/// (S m) x 2N product.
class ModulusColumns final : public lp::ColumnSource {
 public:
  ModulusColumns(const Eigen::MatrixXcd& W, int m) : m_(m) {
    const Eigen::Index S = W.rows();
    const Eigen::Index N = W.cols();
    P_.resize(S, 2 * N);
    Q_.resize(S, 2 * N);
    P_ << W.real(), -W.imag();
    Q_ << W.imag(), W.real();
    cos_.resize(m);
    sin_.resize(m);
    for (int t = 0; t < m; ++t) {
      const double th = 2.0 * M_PI * t / m;
      cos_[static_cast<size_t>(t)] = std::cos(th);
      sin_[static_cast<size_t>(t)] = std::sin(th);
    }
  }

  Eigen::Index rows() const override { return P_.cols(); }
  Eigen::Index cols() const override { return P_.rows() * m_; }

  Eigen::VectorXd column(Eigen::Index j) const override {
    const Eigen::Index s = j / m_;
    const int t = static_cast<int>(j % m_);
    return cos_[static_cast<size_t>(t)] * P_.row(s).transpose() -
           sin_[static_cast<size_t>(t)] * Q_.row(s).transpose();
  }

  Eigen::VectorXd dots(const Eigen::VectorXd& pi) const override {
    const Eigen::VectorXd a = P_ * pi;
    const Eigen::VectorXd b = Q_ * pi;
    Eigen::VectorXd out(cols());
    Eigen::Index j = 0;
    for (Eigen::Index s = 0; s < P_.rows(); ++s) {
      for (int t = 0; t < m_; ++t) {
        out(j++) = cos_[static_cast<size_t>(t)] * a(s) - sin_[static_cast<size_t>(t)] * b(s);
      }
    }
    return out;
  }

 private:
  Eigen::MatrixXd P_, Q_;
  std::vector<double> cos_, sin_;
  int m_;
};

}  // namespace

OracleEstimate lp_envelope(const OracleConfig& cfg, const std::vector<Eigen::VectorXcd>& K_samples,
                           const Eigen::VectorXcd& z) {
  const auto start = std::chrono::steady_clock::now();
  if (cfg.degree < 1) throw std::invalid_argument("lp_envelope: degree must be positive");
  if (cfg.directions < 8) {
    throw std::invalid_argument("lp_envelope: need at least 8 modulus directions");
  }
  if (cfg.objective_directions < 1) {
    throw std::invalid_argument("lp_envelope: need at least one objective direction");
  }
  if (K_samples.empty()) throw std::invalid_argument("lp_envelope: empty sample set");
  const int n = cfg.polytope.dimension();
  if (z.size() != n) throw std::invalid_argument("lp_envelope: point dimension mismatch");

  const auto exps = monomial_exponents(cfg.polytope, cfg.degree);
  if (exps.size() > 2000) {
    throw std::invalid_argument("lp_envelope: monomial basis exceeds the 2000-term cap");
  }
  const Eigen::Index S = static_cast<Eigen::Index>(K_samples.size());
  const Eigen::Index N = static_cast<Eigen::Index>(exps.size());

  Eigen::MatrixXcd W(S, N);
  for (Eigen::Index s = 0; s < S; ++s) {
    if (K_samples[static_cast<size_t>(s)].size() != n) {
      throw std::invalid_argument("lp_envelope: sample dimension mismatch");
    }
    for (Eigen::Index j = 0; j < N; ++j) {
      W(s, j) = monomial_value(K_samples[static_cast<size_t>(s)], exps[static_cast<size_t>(j)]);
    }
  }
  if (!W.allFinite()) throw std::invalid_argument("lp_envelope: non-finite sample monomial");

  Eigen::VectorXcd wz(N);
  for (Eigen::Index j = 0; j < N; ++j) wz(j) = monomial_value(z, exps[static_cast<size_t>(j)]);

  const ModulusColumns G(W, cfg.directions);
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(G.cols());

  lp::Options opt;
  opt.feasibility_tol = cfg.lp_tolerance;
  opt.reduced_cost_tol = cfg.lp_tolerance;

  double best = -std::numeric_limits<double>::infinity();
  Eigen::VectorXd best_pi;
  long iterations = 0;
  std::vector<Eigen::Index> warm;
  for (int t0 = 0; t0 < cfg.objective_directions; ++t0) {
    const double th = 2.0 * M_PI * t0 / cfg.objective_directions;
    const Complex e(std::cos(th), std::sin(th));
    Eigen::VectorXd rhs(2 * N);
    rhs << (e * wz).real(), -(e * wz).imag();

    opt.warm_basis = warm;
    const lp::Solution sol = lp::solve_equality_form(G, ones, rhs, opt);
    iterations += sol.iterations;
    if (sol.status == lp::SolveStatus::Infeasible) {
      // the dual of the envelope LP is infeasible iff the primal is unbounded
      throw OracleUnboundedError(
          "lp_envelope: sample set too thin for the requested degree (ORACLE_UNBOUNDED); "
          "densify K_samples");
    }
    if (sol.status == lp::SolveStatus::IterationLimit) {
      throw SolverStallError("lp_envelope: simplex hit the iteration cap after " +
                             std::to_string(iterations) + " iterations");
    }
    if (sol.status != lp::SolveStatus::Optimal) {
      throw SolverStallError("lp_envelope: unexpected solver status");
    }
    warm = sol.basis;
    if (sol.objective > best) {
      best = sol.objective;
      best_pi = sol.multipliers;
    }
  }

  OracleEstimate est;
  est.degree = cfg.degree;
  est.basis_size = static_cast<int>(N);
  est.solver_iterations = iterations;
  est.raw_value = std::log(best) / cfg.degree;
  const double deflate = std::cos(M_PI / cfg.directions);
  est.lower_value = est.raw_value + std::log(deflate) / cfg.degree;
  est.exponents = exps;
  est.coefficients.resize(N);
  for (Eigen::Index j = 0; j < N; ++j) {
    est.coefficients(j) = deflate * Complex(best_pi(j), best_pi(N + j));
  }
  est.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return est;
}

double chebyshev_oracle(Complex z, int k) {
  require_finite(z, "chebyshev_oracle");
  if (k < 1) throw std::invalid_argument("chebyshev_oracle: k must be positive");
  Complex t_prev(1.0, 0.0);
  Complex t_cur = z;
  for (int j = 1; j < k; ++j) {
    const Complex t_next = 2.0 * z * t_cur - t_prev;
    t_prev = t_cur;
    t_cur = t_next;
  }
  return std::log(std::abs(t_cur)) / k;
}

std::vector<OracleEstimate> convergence_sweep(const OracleConfig& base,
                                              const std::vector<Eigen::VectorXcd>& K_samples,
                                              const Eigen::VectorXcd& z,
                                              const std::vector<int>& degrees) {
  for (size_t i = 1; i < degrees.size(); ++i) {
    if (degrees[i] <= degrees[i - 1]) {
      throw std::invalid_argument("convergence_sweep: degrees must ascend");
    }
  }
  std::vector<OracleEstimate> out;
  out.reserve(degrees.size());
  for (int k : degrees) {
    OracleConfig cfg = base;
    cfg.degree = k;
    out.push_back(lp_envelope(cfg, K_samples, z));
  }
  return out;
}

std::string oracle_report_json(const OracleEstimate& e) {
  nlohmann::json j;
  j["degree"] = e.degree;
  j["basis_size"] = e.basis_size;
  j["raw_value"] = e.raw_value;
  j["lower_value"] = e.lower_value;
  j["solver_iterations"] = e.solver_iterations;
  j["wall_time_ms"] = e.wall_time_ms;
  return j.dump();
}

Complex evaluate_polynomial(const OracleEstimate& e, const Eigen::VectorXcd& x) {
  Complex acc(0.0, 0.0);
  for (size_t j = 0; j < e.exponents.size(); ++j) {
    acc += e.coefficients(static_cast<Eigen::Index>(j)) * monomial_value(x, e.exponents[j]);
  }
  return acc;
}

std::vector<Eigen::VectorXcd> sample_interval(int n) {
  if (n < 2) throw std::invalid_argument("sample_interval: need n >= 2");
  std::vector<Eigen::VectorXcd> out;
  out.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXcd x(1);
    x(0) = Complex(-1.0 + 2.0 * i / (n - 1), 0.0);
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<Eigen::VectorXcd> sample_unit_simplex(int grid) {
  if (grid < 1) throw std::invalid_argument("sample_unit_simplex: need grid >= 1");
  std::vector<Eigen::VectorXcd> out;
  for (int i = 0; i <= grid; ++i) {
    for (int j = 0; j <= grid - i; ++j) {
      Eigen::VectorXcd x(2);
      x(0) = Complex(static_cast<double>(i) / grid, 0.0);
      x(1) = Complex(static_cast<double>(j) / grid, 0.0);
      out.push_back(std::move(x));
    }
  }
  return out;
}

std::vector<Eigen::VectorXcd> sample_trapezoid(const TorusParams& p, int n1, int n2) {
  if (n1 < 2 || n2 < 2) throw std::invalid_argument("sample_trapezoid: need n1, n2 >= 2");
  std::vector<Eigen::VectorXcd> out;
  for (int i = 0; i < n1; ++i) {
    const double x1 = -1.0 + 2.0 * i / (n1 - 1);
    const double half = p.r * x1 + p.R;
    for (int j = 0; j < n2; ++j) {
      Eigen::VectorXcd x(2);
      x(0) = Complex(x1, 0.0);
      x(1) = Complex(-half + 2.0 * half * j / (n2 - 1), 0.0);
      out.push_back(std::move(x));
    }
  }
  return out;
}

std::vector<Eigen::VectorXcd> sample_pi_e(const TorusParams& p, int n1, int n2) {
  if (n1 < 2 || n2 < 2) throw std::invalid_argument("sample_pi_e: need n1, n2 >= 2");
  std::vector<Eigen::VectorXcd> out;
  for (int i = 0; i < n1; ++i) {
    const double t1 = (p.R - p.r) + 2.0 * p.r * i / (n1 - 1);
    for (int j = 0; j < n2; ++j) {
      Eigen::VectorXcd x(2);
      x(0) = Complex(t1, 0.0);
      x(1) = Complex(t1 * t1 * j / (n2 - 1), 0.0);
      out.push_back(std::move(x));
    }
  }
  return out;
}

std::vector<Eigen::VectorXcd> sample_torus_points(const TorusParams& p, int n_theta, int n_phi) {
  const auto pts = sample_real_torus(p, n_theta, n_phi);
  std::vector<Eigen::VectorXcd> out;
  out.reserve(pts.size());
  for (const auto& z : pts) {
    Eigen::VectorXcd x(3);
    x << z(0), z(1), z(2);
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace vtorus
