#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "vtorus/complex_kernel.hpp"

namespace vtorus {

using ComplexPoint2 = Eigen::Vector2cd;
using ComplexPoint3 = Eigen::Vector3cd;
/// Point of the parabolic cylinder w_1^2 = w_2 (same storage as a C^3 point).
using CylinderPoint = Eigen::Vector3cd;

/// Radii of the torus: tube radius r around a center circle of radius R.
struct TorusParams {
  TorusParams(double center_radius, double tube_radius);
  double R;
  double r;
};

/// One of the four local inverses of the projection (z1,z2,z3) -> (z1,z2)
/// restricted to the variety.  outer_sign picks the sheet of sqrt(z1^2+z2^2)
/// inside the radicand, z3_sign the final square root.
struct LeafIndex {
  int outer_sign = +1;
  int z3_sign = +1;
};

/// Points accepted as lying on the variety.
inline constexpr double kOnVarietyTol = 1e-10;
/// Looser residual bound applied at API boundaries (user-supplied points).
inline constexpr double kApiResidualTol = 1e-8;
/// param_point rejects |Im theta| or |Im phi| beyond this (cosh overflow).
inline constexpr double kParamImagBound = 700.0;

/// Scale-normalized defect of the defining quartic
/// (z1^2+z2^2+z3^2-(R^2+r^2))^2 = 4R^2(r^2-z3^2), divided by 1+|z|^4.
double membership_residual(const TorusParams& p, const ComplexPoint3& z);
/// Same zero set through the equivalent form
/// (z1^2+z2^2+z3^2+R^2-r^2)^2 = 4R^2(z1^2+z2^2).
double membership_residual_alt(const TorusParams& p, const ComplexPoint3& z);

/// ((R + r cos theta) cos phi, (R + r cos theta) sin phi, r sin theta);
/// satisfies the defining equation identically for complex angles.
ComplexPoint3 param_point(const TorusParams& p, Complex theta, Complex phi);

/// The polynomial coordinate change taking the variety onto the cylinder:
/// w = ((z1^2+z2^2+z3^2+R^2-r^2)/(2R), z1^2+z2^2, z2^2).
CylinderPoint psi(const TorusParams& p, const ComplexPoint3& z);

/// |w1^2 - w2| / (1 + |w1|^2).
double cylinder_residual(const CylinderPoint& w);

/// All eight (possibly coinciding) preimages of w under psi, indexed by the
/// sign vector in the order (+,+,+), (+,+,-), (+,-,+), ..., (-,-,-).
std::array<ComplexPoint3, 8> psi_inverse(const TorusParams& p, const CylinderPoint& w);

/// z3 on the requested leaf over (z1, z2):
/// z3 = z3_sign * sqrt(r^2 - R^2 - S + outer_sign * 2R sqrt(S)), S = z1^2+z2^2.
Complex leaf_z3(const TorusParams& p, Complex z1, Complex z2, LeafIndex leaf);

/// ((t1 - R)/r, sqrt(t2)) with the principal square root.
ComplexPoint2 phi_map(const TorusParams& p, const ComplexPoint2& t);

/// n_theta x n_phi grid of real torus points at equispaced angles in [0,2pi),
/// theta-major order.
std::vector<ComplexPoint3> sample_real_torus(const TorusParams& p, int n_theta, int n_phi);

/// Rotation by a real angle in the (z1, z2) plane; maps the variety to itself.
ComplexPoint3 rotate_z12(const ComplexPoint3& z, double alpha);

}  // namespace vtorus
