#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "vtorus/complex_kernel.hpp"

namespace vtorus {

/// Convex polytope P in the nonnegative orthant, stored by vertices, acting
/// as a polynomial degree generator: poly(kP) is spanned by the monomials
/// with exponent in kP.
class DegreePolytope {
 public:
  DegreePolytope(int dimension, Eigen::MatrixXd vertices);

  static DegreePolytope unit_simplex(int dimension);
  /// {y in R^2_+ : y_1/2 + y_2 <= 1}, vertices (0,0), (2,0), (0,1).
  static DegreePolytope sigma21();
  /// Schema: {"dimension": n, "vertices": [[...], ...]}.
  static DegreePolytope from_json(const std::string& text);
  static DegreePolytope from_json_file(const std::string& path);

  int dimension() const { return dimension_; }
  /// One vertex per row.
  const Eigen::MatrixXd& vertices() const { return vertices_; }

  bool is_unit_simplex() const { return kind_ == Kind::UnitSimplex; }
  bool is_sigma21() const { return kind_ == Kind::Sigma21; }

  /// Exponent membership alpha in k*P.  Exact integer arithmetic for the
  /// unit simplex and Sigma_{2,1}; facet half-space tests otherwise.
  bool contains_scaled(const Eigen::VectorXi& alpha, int k) const;

 private:
  enum class Kind { General, UnitSimplex, Sigma21 };

  void detect_kind();
  void build_facets();  // lazily built for Kind::General

  int dimension_;
  Eigen::MatrixXd vertices_;
  Kind kind_ = Kind::General;
  // facets of the hull as <normal, offset> with <n,x> <= offset inside
  Eigen::MatrixXd facet_normals_;
  Eigen::VectorXd facet_offsets_;
  bool facets_built_ = false;
};

/// phi_P(x) = max over vertices of <x, v>.
double support_function(const DegreePolytope& P, const Eigen::VectorXd& x);

/// H_P(z) = phi_P(log|z_1|, ..., log|z_n|) with the convention
/// 0 * (-inf) = 0.  Returns -infinity (sentinel, not an exception) when
/// every vertex touches a vanishing coordinate with positive weight.
double log_support(const DegreePolytope& P, const Eigen::VectorXcd& z);

/// All alpha in N^n with alpha in k*P, ascending lexicographic.
std::vector<Eigen::VectorXi> monomial_exponents(const DegreePolytope& P, int k);

/// Finite extremal-point set of the polar body K*, closed under negation.
class SymmetricBodySpec {
 public:
  SymmetricBodySpec(int dimension, Eigen::MatrixXd polar_extremal_points);
  /// Appends the negation of every given point before validating.
  static SymmetricBodySpec from_half(int dimension, const Eigen::MatrixXd& points);
  static SymmetricBodySpec from_json(const std::string& text);
  static SymmetricBodySpec from_json_file(const std::string& path);

  int dimension() const { return dimension_; }
  const Eigen::MatrixXd& polar_extremal_points() const { return points_; }

 private:
  int dimension_;
  Eigen::MatrixXd points_;
};

/// V_K^*(z) = max over y in extr K* of log|h(<z, y>)| with the bilinear
/// (holomorphic) pairing.  Any finite superset of the extreme points gives
/// the same value.
double baran_symmetric(const SymmetricBodySpec& B, const Eigen::VectorXcd& z);

/// Fixed affine data of the trapezoid construction: the shift zeta0 and the
/// matrix L take the triangle K2 onto the standard simplex, and y_1, y_2,
/// y_3 with the 0/1 pattern A drive the three-bracket formula for V_{K2}.
struct TrapezoidData {
  TrapezoidData(double R, double r);

  double R;
  double r;
  Eigen::Vector2d zeta0;               // (R/r, 0)
  Eigen::Matrix2d L;                   // rows y1, y2
  Eigen::Vector2d y1, y2, y3;          // y3 = y1 + y2
  Eigen::Matrix<double, 3, 2> A;       // bracket weight pattern
  Eigen::Matrix<double, 3, 2> k2_vertices;  // apex, upper corner, lower corner

  /// K = {|x1| <= 1, |x2| <= r x1 + R}.
  bool contains_K(const Eigen::Vector2d& x) const;
  /// K2 = {-R/r <= x1 <= 1, |x2| <= r x1 + R}.
  bool contains_K2(const Eigen::Vector2d& x) const;
};

}  // namespace vtorus
