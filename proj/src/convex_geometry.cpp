#include "vtorus/convex_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace vtorus {

namespace {

constexpr double kGeomTol = 1e-12;

bool rows_equal(const Eigen::MatrixXd& m, int i, const Eigen::RowVector2d& v) {
  return (m.row(i) - v).lpNorm<Eigen::Infinity>() <= kGeomTol;
}

}  // namespace

DegreePolytope::DegreePolytope(int dimension, Eigen::MatrixXd vertices)
    : dimension_(dimension), vertices_(std::move(vertices)) {
  if (dimension_ < 1) {
    throw std::invalid_argument("DegreePolytope: dimension must be positive");
  }
  if (vertices_.rows() < 1 || vertices_.cols() != dimension_) {
    throw std::invalid_argument("DegreePolytope: vertex matrix must be nonempty with one row per vertex");
  }
  if (!vertices_.allFinite() || vertices_.minCoeff() < -kGeomTol) {
    throw std::invalid_argument("DegreePolytope: vertices must be finite and nonnegative");
  }
  // P must contain a relative neighborhood of 0: every coordinate direction
  // needs a vertex with positive entry.
  for (int d = 0; d < dimension_; ++d) {
    if (vertices_.col(d).maxCoeff() <= kGeomTol) {
      throw std::invalid_argument("DegreePolytope: no vertex extends along coordinate " + std::to_string(d));
    }
  }
  detect_kind();
  if (kind_ == Kind::General) build_facets();
}

void DegreePolytope::detect_kind() {
  const int n = dimension_;
  const Eigen::Index v = vertices_.rows();
  if (v == n + 1) {
    // unit simplex: {0, e_1, ..., e_n} in any order
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    bool ok = true;
    for (Eigen::Index i = 0; i < v && ok; ++i) {
      const auto row = vertices_.row(i);
      if (row.lpNorm<Eigen::Infinity>() <= kGeomTol) {
        if (seen[0]) ok = false;
        seen[0] = true;
        continue;
      }
      bool matched = false;
      for (int d = 0; d < n; ++d) {
        Eigen::RowVectorXd e = Eigen::RowVectorXd::Zero(n);
        e(d) = 1.0;
        if ((row - e).lpNorm<Eigen::Infinity>() <= kGeomTol) {
          if (seen[static_cast<size_t>(d) + 1]) ok = false;
          seen[static_cast<size_t>(d) + 1] = true;
          matched = true;
          break;
        }
      }
      if (!matched) ok = false;
    }
    if (ok && std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
      kind_ = Kind::UnitSimplex;
      return;
    }
  }
  if (n == 2 && v == 3) {
    bool z = false, two = false, one = false;
    for (Eigen::Index i = 0; i < 3; ++i) {
      z |= rows_equal(vertices_, static_cast<int>(i), Eigen::RowVector2d(0, 0));
      two |= rows_equal(vertices_, static_cast<int>(i), Eigen::RowVector2d(2, 0));
      one |= rows_equal(vertices_, static_cast<int>(i), Eigen::RowVector2d(0, 1));
    }
    if (z && two && one) {
      kind_ = Kind::Sigma21;
      return;
    }
  }
  kind_ = Kind::General;
}

DegreePolytope DegreePolytope::unit_simplex(int dimension) {
  Eigen::MatrixXd verts = Eigen::MatrixXd::Zero(dimension + 1, dimension);
  verts.bottomRows(dimension).setIdentity();
  return DegreePolytope(dimension, std::move(verts));
}

DegreePolytope DegreePolytope::sigma21() {
  Eigen::MatrixXd verts(3, 2);
  verts << 0, 0, 2, 0, 0, 1;
  return DegreePolytope(2, std::move(verts));
}

DegreePolytope DegreePolytope::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  const int n = j.at("dimension").get<int>();
  const auto rows = j.at("vertices");
  if (!rows.is_array() || rows.empty()) {
    throw std::invalid_argument("DegreePolytope: \"vertices\" must be a nonempty array");
  }
  Eigen::MatrixXd verts(rows.size(), n);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("DegreePolytope: vertex row has wrong arity");
    }
    for (int d = 0; d < n; ++d) verts(i, d) = row[static_cast<size_t>(d)].get<double>();
    ++i;
  }
  return DegreePolytope(n, std::move(verts));
}

DegreePolytope DegreePolytope::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

void DegreePolytope::build_facets() {
  if (facets_built_) return;
  facets_built_ = true;
  const int n = dimension_;
  const Eigen::Index v = vertices_.rows();
  std::vector<Eigen::VectorXd> normals;
  std::vector<double> offsets;
  // Hyperplane through every affinely independent n-subset of vertices;
  // kept when all vertices lie on one side.
  std::vector<Eigen::Index> idx(static_cast<size_t>(n));
  std::function<void(Eigen::Index, int)> rec = [&](Eigen::Index start, int depth) {
    if (depth == n) {
      Eigen::MatrixXd m(n, n);
      for (int i = 0; i < n; ++i) m.row(i) = vertices_.row(idx[static_cast<size_t>(i)]);
      // hyperplane <a, x> = c through the n points, plus the orthant walls
      // handled below; solve for a up to scale via the nullspace of the
      // difference matrix when n > 1.
      Eigen::VectorXd a(n);
      double c = 0;
      if (n == 1) {
        a(0) = 1.0;
        c = m(0, 0);
      } else {
        Eigen::MatrixXd d(n - 1, n);
        for (int i = 1; i < n; ++i) d.row(i - 1) = m.row(i) - m.row(0);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(d, Eigen::ComputeFullV);
        if (svd.rank() < n - 1) return;  // degenerate subset
        a = svd.matrixV().col(n - 1);
        c = a.dot(m.row(0));
      }
      const double scale = std::max(1.0, vertices_.cwiseAbs().maxCoeff());
      double lo = 0, hi = 0;
      for (Eigen::Index i = 0; i < v; ++i) {
        const double s = a.dot(vertices_.row(i)) - c;
        lo = std::min(lo, s);
        hi = std::max(hi, s);
      }
      const double tol = 1e-9 * scale;
      if (lo >= -tol || hi <= tol) {
        // supporting hyperplane: orient inequality inward
        if (hi <= tol) {
          normals.push_back(a);
          offsets.push_back(c);
        } else {
          normals.push_back(-a);
          offsets.push_back(-c);
        }
      }
      return;
    }
    for (Eigen::Index i = start; i < v; ++i) {
      idx[static_cast<size_t>(depth)] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  // orthant walls: x_d >= 0
  for (int d = 0; d < n; ++d) {
    Eigen::VectorXd a = Eigen::VectorXd::Zero(n);
    a(d) = -1.0;
    normals.push_back(a);
    offsets.push_back(0.0);
  }
  facet_normals_.resize(static_cast<Eigen::Index>(normals.size()), n);
  facet_offsets_.resize(static_cast<Eigen::Index>(normals.size()));
  for (size_t i = 0; i < normals.size(); ++i) {
    facet_normals_.row(static_cast<Eigen::Index>(i)) = normals[i];
    facet_offsets_(static_cast<Eigen::Index>(i)) = offsets[i];
  }
}

bool DegreePolytope::contains_scaled(const Eigen::VectorXi& alpha, int k) const {
  if (alpha.size() != dimension_) {
    throw std::invalid_argument("contains_scaled: exponent dimension mismatch");
  }
  switch (kind_) {
    case Kind::UnitSimplex:
      return alpha.sum() <= k;
    case Kind::Sigma21:
      return alpha(0) + 2 * alpha(1) <= 2 * k;
    case Kind::General:
      break;
  }
  const Eigen::VectorXd x = alpha.cast<double>();
  const double scale = std::max(1.0, x.lpNorm<Eigen::Infinity>());
  for (Eigen::Index f = 0; f < facet_normals_.rows(); ++f) {
    if (facet_normals_.row(f).dot(x) > static_cast<double>(k) * facet_offsets_(f) + 1e-9 * scale) {
      return false;
    }
  }
  return true;
}

double support_function(const DegreePolytope& P, const Eigen::VectorXd& x) {
  if (x.size() != P.dimension()) {
    throw std::invalid_argument("support_function: dimension mismatch");
  }
  if (!x.allFinite()) {
    throw std::invalid_argument("support_function: non-finite argument");
  }
  return (P.vertices() * x).maxCoeff();
}

double log_support(const DegreePolytope& P, const Eigen::VectorXcd& z) {
  if (z.size() != P.dimension()) {
    throw std::invalid_argument("log_support: dimension mismatch");
  }
  const double neg_inf = -std::numeric_limits<double>::infinity();
  double best = neg_inf;
  for (Eigen::Index i = 0; i < P.vertices().rows(); ++i) {
    double acc = 0;
    bool dead = false;
    for (int d = 0; d < P.dimension(); ++d) {
      const double w = P.vertices()(i, d);
      if (w == 0.0) continue;  // 0 * (-inf) = 0
      const double m = std::abs(z(d));
      if (m == 0.0) {
        dead = true;
        break;
      }
      acc += w * std::log(m);
    }
    if (!dead) best = std::max(best, acc);
  }
  return best;  // -inf sentinel when every vertex dies
}

namespace {

void enumerate_lex(const DegreePolytope& P, int k, int depth, Eigen::VectorXi& alpha,
                   const Eigen::VectorXi& box, std::vector<Eigen::VectorXi>& out) {
  if (depth == P.dimension()) {
    if (P.contains_scaled(alpha, k)) out.push_back(alpha);
    return;
  }
  for (int a = 0; a <= box(depth); ++a) {
    alpha(depth) = a;
    enumerate_lex(P, k, depth + 1, alpha, box, out);
  }
}

}  // namespace

std::vector<Eigen::VectorXi> monomial_exponents(const DegreePolytope& P, int k) {
  if (k < 0) throw std::invalid_argument("monomial_exponents: k must be nonnegative");
  Eigen::VectorXi box(P.dimension());
  for (int d = 0; d < P.dimension(); ++d) {
    box(d) = static_cast<int>(std::floor(k * P.vertices().col(d).maxCoeff() + 1e-9));
  }
  std::vector<Eigen::VectorXi> out;
  Eigen::VectorXi alpha = Eigen::VectorXi::Zero(P.dimension());
  enumerate_lex(P, k, 0, alpha, box, out);
  return out;
}

SymmetricBodySpec::SymmetricBodySpec(int dimension, Eigen::MatrixXd polar_extremal_points)
    : dimension_(dimension), points_(std::move(polar_extremal_points)) {
  if (dimension_ < 1) {
    throw std::invalid_argument("SymmetricBodySpec: dimension must be positive");
  }
  if (points_.rows() < 1 || points_.cols() != dimension_ || !points_.allFinite()) {
    throw std::invalid_argument("SymmetricBodySpec: bad point matrix");
  }
  for (Eigen::Index i = 0; i < points_.rows(); ++i) {
    bool found = false;
    for (Eigen::Index j = 0; j < points_.rows() && !found; ++j) {
      found = (points_.row(i) + points_.row(j)).lpNorm<Eigen::Infinity>() <= kGeomTol;
    }
    if (!found) {
      throw std::invalid_argument("SymmetricBodySpec: point set not closed under negation");
    }
  }
}

SymmetricBodySpec SymmetricBodySpec::from_half(int dimension, const Eigen::MatrixXd& points) {
  Eigen::MatrixXd sym(2 * points.rows(), points.cols());
  sym.topRows(points.rows()) = points;
  sym.bottomRows(points.rows()) = -points;
  return SymmetricBodySpec(dimension, std::move(sym));
}

SymmetricBodySpec SymmetricBodySpec::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  const int n = j.at("dimension").get<int>();
  const auto rows = j.at("vertices");
  Eigen::MatrixXd pts(rows.size(), n);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    for (int d = 0; d < n; ++d) pts(i, d) = row.at(static_cast<size_t>(d)).get<double>();
    ++i;
  }
  return SymmetricBodySpec(n, std::move(pts));
}

SymmetricBodySpec SymmetricBodySpec::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

double baran_symmetric(const SymmetricBodySpec& B, const Eigen::VectorXcd& z) {
  if (z.size() != B.dimension()) {
    throw std::invalid_argument("baran_symmetric: dimension mismatch");
  }
  if (B.polar_extremal_points().rows() == 0) {
    throw std::invalid_argument("baran_symmetric: empty point list");
  }
  double best = 0.0;
  for (Eigen::Index i = 0; i < B.polar_extremal_points().rows(); ++i) {
    Complex dot(0, 0);
    for (int d = 0; d < B.dimension(); ++d) {
      dot += z(d) * B.polar_extremal_points()(i, d);  // bilinear, no conjugation
    }
    best = std::max(best, log_h(dot));
  }
  return best;
}

TrapezoidData::TrapezoidData(double R_, double r_) : R(R_), r(r_) {
  if (!(r > 0) || !(R > r) || !std::isfinite(R)) {
    throw std::invalid_argument("TrapezoidData: need 0 < r < R < inf");
  }
  zeta0 << R / r, 0.0;
  const double c = 1.0 / (2.0 * (R + r));
  L << r * c, c, r * c, -c;
  y1 = L.row(0);
  y2 = L.row(1);
  y3 = y1 + y2;
  A << 1, 0, 0, 1, 1, 1;
  k2_vertices << -R / r, 0.0, 1.0, R + r, 1.0, -(R + r);
  // the affine normalization must take K2 onto the standard simplex
  for (int i = 0; i < 3; ++i) {
    const Eigen::Vector2d s = L * (k2_vertices.row(i).transpose() + zeta0);
    const bool on_vertex = s.lpNorm<Eigen::Infinity>() <= 1e-12 ||
                           (s - Eigen::Vector2d(1, 0)).lpNorm<Eigen::Infinity>() <= 1e-12 ||
                           (s - Eigen::Vector2d(0, 1)).lpNorm<Eigen::Infinity>() <= 1e-12;
    if (!on_vertex) {
      throw std::logic_error("TrapezoidData: L(K2 + zeta0) missed a simplex vertex");
    }
  }
}

bool TrapezoidData::contains_K(const Eigen::Vector2d& x) const {
  return std::abs(x(0)) <= 1.0 && std::abs(x(1)) <= r * x(0) + R;
}

bool TrapezoidData::contains_K2(const Eigen::Vector2d& x) const {
  return x(0) >= -R / r && x(0) <= 1.0 && std::abs(x(1)) <= r * x(0) + R;
}

}  // namespace vtorus
