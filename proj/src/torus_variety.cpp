#include "vtorus/torus_variety.hpp"

#include <cmath>
#include <stdexcept>

namespace vtorus {

TorusParams::TorusParams(double center_radius, double tube_radius)
    : R(center_radius), r(tube_radius) {
  if (!std::isfinite(R) || !std::isfinite(r) || !(r > 0.0) || !(r < R)) {
    throw std::invalid_argument("TorusParams: need 0 < r < R < inf");
  }
}

namespace {

void require_finite_point(const ComplexPoint3& z, const char* where) {
  for (int i = 0; i < 3; ++i) require_finite(z(i), where);
}

double quartic_scale(const ComplexPoint3& z) {
  const double n2 = z.squaredNorm();  // sum of |z_i|^2
  return 1.0 + n2 * n2;
}

}  // namespace

double membership_residual(const TorusParams& p, const ComplexPoint3& z) {
  require_finite_point(z, "membership_residual");
  const Complex q = z(0) * z(0) + z(1) * z(1) + z(2) * z(2);
  const Complex lhs = q - (p.R * p.R + p.r * p.r);
  const Complex rhs = 4.0 * p.R * p.R * (p.r * p.r - z(2) * z(2));
  return std::abs(lhs * lhs - rhs) / quartic_scale(z);
}

double membership_residual_alt(const TorusParams& p, const ComplexPoint3& z) {
  require_finite_point(z, "membership_residual_alt");
  const Complex s = z(0) * z(0) + z(1) * z(1);
  const Complex lhs = s + z(2) * z(2) + (p.R * p.R - p.r * p.r);
  return std::abs(lhs * lhs - 4.0 * p.R * p.R * s) / quartic_scale(z);
}

ComplexPoint3 param_point(const TorusParams& p, Complex theta, Complex phi) {
  require_finite(theta, "param_point");
  require_finite(phi, "param_point");
  if (std::abs(theta.imag()) > kParamImagBound || std::abs(phi.imag()) > kParamImagBound) {
    throw std::range_error("param_point: |Im theta| and |Im phi| must stay below 700");
  }
  const Complex rho = p.R + p.r * std::cos(theta);
  return ComplexPoint3(rho * std::cos(phi), rho * std::sin(phi), p.r * std::sin(theta));
}

CylinderPoint psi(const TorusParams& p, const ComplexPoint3& z) {
  require_finite_point(z, "psi");
  const Complex s = z(0) * z(0) + z(1) * z(1);
  const Complex w1 = (s + z(2) * z(2) + (p.R * p.R - p.r * p.r)) / (2.0 * p.R);
  return CylinderPoint(w1, s, z(1) * z(1));
}

double cylinder_residual(const CylinderPoint& w) {
  return std::abs(w(0) * w(0) - w(1)) / (1.0 + std::norm(w(0)));
}

std::array<ComplexPoint3, 8> psi_inverse(const TorusParams& p, const CylinderPoint& w) {
  require_finite_point(w, "psi_inverse");
  const Complex a = sqrt_principal(w(1) - w(2));
  const Complex b = sqrt_principal(w(2));
  const Complex c = sqrt_principal(2.0 * p.R * w(0) - w(1) + (p.r * p.r - p.R * p.R));
  std::array<ComplexPoint3, 8> out;
  int i = 0;
  for (double a1 : {1.0, -1.0}) {
    for (double a2 : {1.0, -1.0}) {
      for (double a3 : {1.0, -1.0}) {
        out[static_cast<size_t>(i++)] = ComplexPoint3(a1 * a, a2 * b, a3 * c);
      }
    }
  }
  return out;
}

Complex leaf_z3(const TorusParams& p, Complex z1, Complex z2, LeafIndex leaf) {
  require_finite(z1, "leaf_z3");
  require_finite(z2, "leaf_z3");
  if ((leaf.outer_sign != 1 && leaf.outer_sign != -1) ||
      (leaf.z3_sign != 1 && leaf.z3_sign != -1)) {
    throw std::invalid_argument("leaf_z3: signs must be +1 or -1");
  }
  const Complex s = z1 * z1 + z2 * z2;
  const Complex radicand = p.r * p.r - p.R * p.R - s +
                           static_cast<double>(leaf.outer_sign) * 2.0 * p.R * sqrt_principal(s);
  return static_cast<double>(leaf.z3_sign) * sqrt_principal(radicand);
}

ComplexPoint2 phi_map(const TorusParams& p, const ComplexPoint2& t) {
  require_finite(t(0), "phi_map");
  require_finite(t(1), "phi_map");
  return ComplexPoint2((t(0) - p.R) / p.r, sqrt_principal(t(1)));
}

std::vector<ComplexPoint3> sample_real_torus(const TorusParams& p, int n_theta, int n_phi) {
  if (n_theta < 1 || n_phi < 1) {
    throw std::invalid_argument("sample_real_torus: grid counts must be >= 1");
  }
  std::vector<ComplexPoint3> out;
  out.reserve(static_cast<size_t>(n_theta) * static_cast<size_t>(n_phi));
  const double two_pi = 2.0 * M_PI;
  for (int i = 0; i < n_theta; ++i) {
    const double theta = two_pi * i / n_theta;
    const double rho = p.R + p.r * std::cos(theta);
    const double z3 = p.r * std::sin(theta);
    for (int j = 0; j < n_phi; ++j) {
      const double phi = two_pi * j / n_phi;
      out.emplace_back(Complex(rho * std::cos(phi), 0.0), Complex(rho * std::sin(phi), 0.0),
                       Complex(z3, 0.0));
    }
  }
  return out;
}

ComplexPoint3 rotate_z12(const ComplexPoint3& z, double alpha) {
  const double c = std::cos(alpha);
  const double s = std::sin(alpha);
  return ComplexPoint3(c * z(0) - s * z(1), s * z(0) + c * z(1), z(2));
}

}  // namespace vtorus
