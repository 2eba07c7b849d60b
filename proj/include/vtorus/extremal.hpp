#pragma once

#include "vtorus/convex_geometry.hpp"
#include "vtorus/torus_variety.hpp"

namespace vtorus {

/// Which argument of the outer max attained the value.
enum class ActiveBranch { IntervalTerm, SimplexTerm };

inline const char* to_string(ActiveBranch b) {
  return b == ActiveBranch::IntervalTerm ? "interval" : "simplex";
}

struct EvalResult {
  double value;               // the extremal function value, >= 0
  ActiveBranch active_branch; // argmax of the two-term max; ties -> simplex
  double h_argument;          // real argument handed to log h, >= 1
};

/// Thrown when a point misses the variety (or the cylinder) by more than the
/// API acceptance residual.
class OffVarietyError : public std::domain_error {
 public:
  OffVarietyError(const std::string& what, double residual)
      : std::domain_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

namespace detail {

/// Arguments this close to 1 evaluate to exactly 0.  The closed forms feed
/// log h real arguments that equal 1 identically on the zero set; rounding
/// in the quartic pipeline perturbs them by O(1e-15), which arccosh would
/// amplify to O(1e-8).  Snapping reports exact zeros there and caps the
/// perturbation of genuinely positive values at arccosh(1 + 1e-13) ~ 4.5e-7.
inline constexpr double kHArgumentSnap = 1e-13;

/// log h(m) = arccosh(m) for real m >= 1, with the near-1 snap.
double log_h_from_argument(double m);

/// (|zeta+1| + |zeta-1|)/2; always >= 1 up to rounding.
double interval_argument(Complex zeta);

/// |s1| + |s2| + |s1+s2-1|; always >= 1 up to rounding.
double simplex_argument(Complex s1, Complex s2);

}  // namespace detail

/// Extremal function of [-1,1]: log h((|zeta+1| + |zeta-1|)/2).
double v_interval(Complex zeta);

/// Extremal function of the standard simplex in R^2:
/// log h(|s1| + |s2| + |s1+s2-1|).
double v_simplex(const ComplexPoint2& s);

/// Extremal function of the triangle K2, through the affine reduction to the
/// simplex: V_Sigma(L (zeta + zeta0)).
double v_K2_via_simplex(const TorusParams& p, const ComplexPoint2& zeta);

/// The same function through the shifted three-bracket formula
/// log h( max_k sum_l A_kl |y_l . zt| + |y_k . zt - 1| ), zt = zeta + zeta0.
double v_K2_via_baran(const TorusParams& p, const ComplexPoint2& zeta);

/// Extremal function of the trapezoid K: max of the K1 strip term and the
/// K2 term, with branch diagnostics.
EvalResult v_trapezoid(const TorusParams& p, const ComplexPoint2& zeta);

/// Sigma_{2,1}-extremal function of pi(E): 2 V_K(Phi(t)).
double v_piE(const TorusParams& p, const ComplexPoint2& t);

/// Extremal function of E inside the cylinder; defined for w with
/// w1^2 = w2 only (throws OffVarietyError otherwise).
double v_cylinder(const TorusParams& p, const CylinderPoint& w);

/// Extremal function of the real torus inside its complexification.
/// The point must satisfy membership_residual <= 1e-8; the square roots of
/// the displayed formula are evaluated through the cylinder coordinates
/// (rho := psi_1(z), a polynomial, so the value is constant on psi fibers;
/// the sqrt(w3) = +-z2 branch cancels in the symmetric sum).
EvalResult v_torus(const TorusParams& p, const ComplexPoint3& z);

}  // namespace vtorus
