#include "vtorus/extremal.hpp"

#include <algorithm>
#include <cmath>

namespace vtorus {

namespace detail {

double log_h_from_argument(double m) {
  const double d = m - 1.0;
  if (d <= kHArgumentSnap) return 0.0;
  // arccosh through log1p: full relative accuracy down to the snap edge
  return std::log1p(d + std::sqrt(d * (d + 2.0)));
}

double interval_argument(Complex zeta) {
  return 0.5 * (std::abs(zeta + 1.0) + std::abs(zeta - 1.0));
}

double simplex_argument(Complex s1, Complex s2) {
  return std::abs(s1) + std::abs(s2) + std::abs(s1 + s2 - 1.0);
}

namespace {

// shared core of the cylinder/torus formulas: value before the factor 2
EvalResult cylinder_core(const TorusParams& p, Complex w1, Complex w3) {
  const Complex zeta = (w1 - p.R) / p.r;
  const double m_interval = interval_argument(zeta);
  const Complex q = sqrt_principal(w3);
  const double scale = 2.0 * (p.R + p.r);
  const double m_simplex = simplex_argument((w1 + q) / scale, (w1 - q) / scale);
  EvalResult res;
  res.active_branch =
      m_interval > m_simplex ? ActiveBranch::IntervalTerm : ActiveBranch::SimplexTerm;
  const double m = std::max(m_interval, m_simplex);
  res.value = log_h_from_argument(m);
  res.h_argument = res.value == 0.0 ? 1.0 : m;
  return res;
}

}  // namespace
}  // namespace detail

double v_interval(Complex zeta) {
  require_finite(zeta, "v_interval");
  return detail::log_h_from_argument(detail::interval_argument(zeta));
}

double v_simplex(const ComplexPoint2& s) {
  require_finite(s(0), "v_simplex");
  require_finite(s(1), "v_simplex");
  return detail::log_h_from_argument(detail::simplex_argument(s(0), s(1)));
}

double v_K2_via_simplex(const TorusParams& p, const ComplexPoint2& zeta) {
  const TrapezoidData data(p.R, p.r);
  const ComplexPoint2 shifted(zeta(0) + data.zeta0(0), zeta(1) + data.zeta0(1));
  const ComplexPoint2 s = data.L.cast<Complex>() * shifted;
  return v_simplex(s);
}

double v_K2_via_baran(const TorusParams& p, const ComplexPoint2& zeta) {
  require_finite(zeta(0), "v_K2_via_baran");
  require_finite(zeta(1), "v_K2_via_baran");
  const TrapezoidData data(p.R, p.r);
  const ComplexPoint2 zt(zeta(0) + data.zeta0(0), zeta(1) + data.zeta0(1));
  const Complex dots[3] = {
      data.y1(0) * zt(0) + data.y1(1) * zt(1),
      data.y2(0) * zt(0) + data.y2(1) * zt(1),
      data.y3(0) * zt(0) + data.y3(1) * zt(1),
  };
  double m = 0.0;
  for (int k = 0; k < 3; ++k) {
    double bracket = std::abs(dots[k] - 1.0);
    for (int l = 0; l < 2; ++l) bracket += data.A(k, l) * std::abs(dots[l]);
    m = std::max(m, bracket);
  }
  return detail::log_h_from_argument(m);
}

EvalResult v_trapezoid(const TorusParams& p, const ComplexPoint2& zeta) {
  require_finite(zeta(0), "v_trapezoid");
  require_finite(zeta(1), "v_trapezoid");
  const double m_interval = detail::interval_argument(zeta(0));
  const TrapezoidData data(p.R, p.r);
  const ComplexPoint2 shifted(zeta(0) + data.zeta0(0), zeta(1) + data.zeta0(1));
  const ComplexPoint2 s = data.L.cast<Complex>() * shifted;
  const double m_simplex = detail::simplex_argument(s(0), s(1));
  EvalResult res;
  res.active_branch =
      m_interval > m_simplex ? ActiveBranch::IntervalTerm : ActiveBranch::SimplexTerm;
  const double m = std::max(m_interval, m_simplex);
  res.value = detail::log_h_from_argument(m);
  res.h_argument = res.value == 0.0 ? 1.0 : m;
  return res;
}

double v_piE(const TorusParams& p, const ComplexPoint2& t) {
  return 2.0 * v_trapezoid(p, phi_map(p, t)).value;
}

double v_cylinder(const TorusParams& p, const CylinderPoint& w) {
  for (int i = 0; i < 3; ++i) require_finite(w(i), "v_cylinder");
  const double res = cylinder_residual(w);
  if (res > kApiResidualTol) {
    throw OffVarietyError("v_cylinder: point misses the cylinder w1^2 = w2", res);
  }
  return 2.0 * detail::cylinder_core(p, w(0), w(2)).value;
}

EvalResult v_torus(const TorusParams& p, const ComplexPoint3& z) {
  for (int i = 0; i < 3; ++i) require_finite(z(i), "v_torus");
  const double res = membership_residual(p, z);
  if (res > kApiResidualTol) {
    throw OffVarietyError("v_torus: point misses the variety", res);
  }
  const CylinderPoint w = psi(p, z);
  return detail::cylinder_core(p, w(0), w(2));
}

}  // namespace vtorus
