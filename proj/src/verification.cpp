#include "vtorus/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "vtorus/siciak_oracle.hpp"

namespace vtorus {

namespace {

std::string describe(double worst, double budget) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << "worst " << worst << " vs budget " << budget;
  return os.str();
}

CheckReport make_report(std::string name, double worst, double budget) {
  CheckReport rep;
  rep.name = std::move(name);
  rep.worst = worst;
  rep.budget = budget;
  rep.pass = worst <= budget;
  rep.detail = describe(worst, budget);
  return rep;
}

}  // namespace

CheckReport check_zero_on_torus(std::uint64_t) {
  double worst = 0;
  const std::pair<double, double> radii[] = {{2.0, 1.0}, {5.0, 0.5}, {1.5, 1.4}};
  for (const auto& pr : radii) {
    const TorusParams p(pr.first, pr.second);
    for (const auto& z : sample_real_torus(p, 64, 64)) {
      worst = std::max(worst, v_torus(p, z).value);
    }
  }
  return make_report("zero on real torus (64x64, three radii)", worst, 1e-12);
}

CheckReport check_cross_formula_k2(std::uint64_t seed) {
  Rng rng(seed);
  const TorusParams p(2.0, 1.0);
  double worst = 0;
  int done = 0;
  while (done < 1000) {
    const ComplexPoint2 zeta(rng.uniform_complex(-10, 10), rng.uniform_complex(-10, 10));
    if (zeta.norm() > 10.0) continue;
    ++done;
    worst = std::max(worst, std::abs(v_K2_via_simplex(p, zeta) - v_K2_via_baran(p, zeta)));
  }
  return make_report("K2 formula agreement (simplex route vs bracket route)", worst, 1e-10);
}

CheckReport check_trapezoid_reflection(std::uint64_t seed) {
  Rng rng(seed);
  const TorusParams p(2.0, 1.0);
  double worst = 0;
  for (int i = 0; i < 500; ++i) {
    const Complex z1 = rng.uniform_complex(-5, 5);
    const Complex z2 = rng.uniform_complex(-5, 5);
    const EvalResult a = v_trapezoid(p, ComplexPoint2(z1, z2));
    const EvalResult b = v_trapezoid(p, ComplexPoint2(z1, -z2));
    worst = std::max(worst, std::abs(a.value - b.value));
  }
  return make_report("trapezoid zeta2 reflection", worst, 1e-14);
}

CheckReport check_cylinder_branch_swap(std::uint64_t seed) {
  Rng rng(seed);
  const TorusParams p(2.0, 1.0);
  double worst = 0;
  for (int i = 0; i < 500; ++i) {
    const Complex w1 = rng.uniform_complex(-3, 3);
    const Complex w3 = rng.uniform_complex(-3, 3);
    const Complex q = sqrt_principal(w3);
    const double scale = 2.0 * (p.R + p.r);
    const double direct = v_simplex(ComplexPoint2((w1 + q) / scale, (w1 - q) / scale));
    const double swapped = v_simplex(ComplexPoint2((w1 - q) / scale, (w1 + q) / scale));
    worst = std::max(worst, std::abs(direct - swapped));
  }
  return make_report("cylinder sqrt(w3) branch swap", worst, 1e-14);
}

CheckReport check_fiber_constancy(std::uint64_t seed) {
  Rng rng(seed);
  const TorusParams p(2.0, 1.0);
  double worst = 0;
  for (int i = 0; i < 500; ++i) {
    const Complex w1 = rng.uniform_complex(-3, 3);
    const CylinderPoint w(w1, w1 * w1, rng.uniform_complex(-3, 3));
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& z : psi_inverse(p, w)) {
      if (membership_residual(p, z) > kApiResidualTol) continue;
      const double v = v_torus(p, z).value;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    worst = std::max(worst, hi - lo);
  }
  return make_report("fiber constancy across psi preimages", worst, 1e-11);
}

CheckReport check_rotation_invariance(std::uint64_t seed) {
  Rng rng(seed);
  const TorusParams p(2.0, 1.0);
  double worst = 0;
  for (int i = 0; i < 500; ++i) {
    const Complex theta(rng.uniform(-M_PI, M_PI), rng.uniform(-1.5, 1.5));
    const Complex phi(rng.uniform(-M_PI, M_PI), rng.uniform(-1.5, 1.5));
    const ComplexPoint3 z = param_point(p, theta, phi);
    const ComplexPoint3 zr = rotate_z12(z, rng.uniform(0, 2 * M_PI));
    worst = std::max(worst, std::abs(v_torus(p, z).value - v_torus(p, zr).value));
  }
  return make_report("rotation invariance on the variety", worst, 1e-9);
}

CheckReport check_growth(std::uint64_t) {
  const TorusParams p(2.0, 1.0);
  double worst_spot = 0;
  double tv = 0;
  double prev = 0;
  for (int i = 0; i < 100; ++i) {
    const double lam = 3.0 + 7.0 * i / 99.0;
    const ComplexPoint3 z = param_point(p, Complex(0, lam), 0.0);
    const double v = v_torus(p, z).value;
    worst_spot = std::max(worst_spot, std::abs(v - lam));
    const double diff = v - std::log(z.norm());
    if (i > 0) tv += std::abs(diff - prev);
    prev = diff;
  }
  // both halves must hold; fold the TV budget into a single defect measure
  const double defect = std::max(worst_spot / 1e-9, tv / 1.0);
  auto rep = make_report("growth along the imaginary-theta ray", defect, 1.0);
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << "|v-lambda| worst " << worst_spot << ", total variation " << tv;
  rep.detail = os.str();
  return rep;
}

CheckReport check_leaf_vieta(std::uint64_t seed) {
  Rng rng(seed);
  const TorusParams p(2.0, 1.0);
  double worst = 0;
  for (int i = 0; i < 200; ++i) {
    const Complex z1 = rng.uniform_complex(-4, 4);
    const Complex z2 = rng.uniform_complex(-4, 4);
    // quartic in z3: z3^4 + a z3^2 + b with a = 2C + 4R^2, b = C^2 - 4R^2r^2,
    // C = S - R^2 - r^2
    const Complex S = z1 * z1 + z2 * z2;
    const Complex C = S - (p.R * p.R + p.r * p.r);
    const Complex a = 2.0 * C + 4.0 * p.R * p.R;
    const Complex b = C * C - 4.0 * p.R * p.R * p.r * p.r;
    Complex roots[4];
    int idx = 0;
    for (int outer : {+1, -1}) {
      for (int sign : {+1, -1}) {
        roots[idx++] = leaf_z3(p, z1, z2, LeafIndex{outer, sign});
      }
    }
    const Complex e1 = roots[0] + roots[1] + roots[2] + roots[3];
    Complex e2(0, 0);
    for (int u = 0; u < 4; ++u) {
      for (int v = u + 1; v < 4; ++v) e2 += roots[u] * roots[v];
    }
    const Complex e4 = roots[0] * roots[1] * roots[2] * roots[3];
    const double scale = 1.0 + std::abs(S) * std::abs(S);
    const double defect = std::max({std::abs(e1), std::abs(e2 - a), std::abs(e4 - b)}) / scale;
    worst = std::max(worst, defect);
  }
  return make_report("leaf roots vs quartic coefficients (Vieta)", worst, 1e-9);
}

CheckReport check_oracle_sandwich_fast(std::uint64_t) {
  // interval target at a spot point, low degree: lower bound within budget
  const auto samples = sample_interval(101);
  Eigen::VectorXcd z(1);
  z(0) = Complex(2.0, 0.0);
  OracleConfig cfg(4, DegreePolytope::unit_simplex(1));
  cfg.objective_directions = 4;
  const OracleEstimate est = lp_envelope(cfg, samples, z);
  const double v = v_interval(z(0));
  const double gap = v - est.lower_value;
  const bool pass = gap >= -0.02 && gap <= std::log(2.0) / 4 + 0.05;
  CheckReport rep;
  rep.name = "oracle sandwich (interval, k=4)";
  rep.worst = gap;
  rep.budget = std::log(2.0) / 4 + 0.05;
  rep.pass = pass;
  std::ostringstream os;
  os.precision(6);
  os << "gap " << gap << " within [-0.02, " << rep.budget << "]";
  rep.detail = os.str();
  return rep;
}

std::vector<std::string> verification_suite_names() {
  return {"all", "zeroset", "crossformula", "symmetry", "fiber", "rotation",
          "growth", "vieta", "oracle"};
}

std::vector<CheckReport> run_verification_suite(const std::string& suite, std::uint64_t seed) {
  const auto names = verification_suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    throw std::invalid_argument("unknown verification suite: " + suite);
  }
  std::vector<CheckReport> out;
  const bool all = suite == "all";
  if (all || suite == "zeroset") out.push_back(check_zero_on_torus(seed));
  if (all || suite == "crossformula") out.push_back(check_cross_formula_k2(seed));
  if (all || suite == "symmetry") {
    out.push_back(check_trapezoid_reflection(seed));
    out.push_back(check_cylinder_branch_swap(seed));
  }
  if (all || suite == "fiber") out.push_back(check_fiber_constancy(seed));
  if (all || suite == "rotation") out.push_back(check_rotation_invariance(seed));
  if (all || suite == "growth") out.push_back(check_growth(seed));
  if (all || suite == "vieta") out.push_back(check_leaf_vieta(seed));
  if (all || suite == "oracle") out.push_back(check_oracle_sandwich_fast(seed));
  return out;
}

}  // namespace vtorus
