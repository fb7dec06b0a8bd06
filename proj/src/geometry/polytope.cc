#include "lmpc/geometry/polytope.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "lmpc/geometry/hull.h"
#include "lmpc/io/number_format.h"
#include "lmpc/solver/convex_program.h"

namespace lmpc::geometry {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Extreme points of a cloud, reordered counter-clockwise in 2-D.
Mat reduce_to_extreme(const Mat& pts) {
  const int d = static_cast<int>(pts.rows());
  Mat U = unique_points(pts);
  if (U.cols() <= 1) return U;
  if (d == 1) {
    Mat out(1, 2);
    out << U.minCoeff(), U.maxCoeff();
    return unique_points(out);
  }
  try {
    if (d == 2) {
      const std::vector<int> h = convex_hull_2d(U);
      Mat out(2, h.size());
      for (size_t i = 0; i < h.size(); ++i) out.col(i) = U.col(h[i]);
      return out;
    }
    if (d == 3) {
      const auto tris = convex_hull_3d(U);
      std::vector<char> used(U.cols(), 0);
      for (const auto& t : tris)
        for (int v : t.v) used[v] = 1;
      std::vector<int> keep;
      for (int i = 0; i < U.cols(); ++i)
        if (used[i]) keep.push_back(i);
      Mat out(3, keep.size());
      for (size_t i = 0; i < keep.size(); ++i) out.col(i) = U.col(keep[i]);
      return out;
    }
  } catch (const DegenerateHullError&) {
    // Lower-dimensional cloud: keep the two extreme points along the main
    // direction when collinear, otherwise every unique point.
    Vec c = U.rowwise().mean();
    Mat D = U.colwise() - c;
    Eigen::JacobiSVD<Mat> svd(D, Eigen::ComputeThinU);
    const Vec& s = svd.singularValues();
    if (s.size() < 2 || s[1] <= 1e-9 * std::max(1.0, s[0])) {
      const Vec dir = svd.matrixU().col(0);
      Eigen::Index lo, hi;
      (dir.transpose() * U).minCoeff(&lo);
      (dir.transpose() * U).maxCoeff(&hi);
      Mat out(d, 2);
      out << U.col(lo), U.col(hi);
      return unique_points(out);
    }
  }
  return U;
}

double scale_of(const Mat& M) { return std::max(1.0, M.size() ? M.cwiseAbs().maxCoeff() : 0.0); }

}  // namespace

Mat unique_points(const Mat& pts, double tol) {
  std::vector<int> keep;
  for (int i = 0; i < pts.cols(); ++i) {
    bool dup = false;
    for (int k : keep) {
      if ((pts.col(i) - pts.col(k)).cwiseAbs().maxCoeff() <= tol) {
        dup = true;
        break;
      }
    }
    if (!dup) keep.push_back(i);
  }
  Mat out(pts.rows(), keep.size());
  for (size_t i = 0; i < keep.size(); ++i) out.col(i) = pts.col(keep[i]);
  return out;
}

Polytope Polytope::from_halfspaces(const Mat& A, const Vec& b) {
  if (A.rows() != b.size()) throw std::invalid_argument("from_halfspaces: shape mismatch");
  if (A.cols() < 1) throw std::invalid_argument("from_halfspaces: dim must be >= 1");
  Polytope P;
  P.dim_ = static_cast<int>(A.cols());
  P.empty_ = false;
  std::vector<int> keep;
  for (int i = 0; i < A.rows(); ++i) {
    if (A.row(i).norm() > 1e-14) {
      keep.push_back(i);
    } else if (b[i] < -1e-12) {
      return empty(P.dim_);
    }
  }
  P.A_.resize(keep.size(), A.cols());
  P.b_.resize(keep.size());
  for (size_t k = 0; k < keep.size(); ++k) {
    double nrm = A.row(keep[k]).norm();
    if (std::abs(nrm - 1.0) <= 1e-15) nrm = 1.0;  // already normalized: keep bits
    P.A_.row(k) = A.row(keep[k]) / nrm;
    P.b_[k] = b[keep[k]] / nrm;
  }
  P.has_h_ = true;
  return P;
}

Polytope Polytope::from_vertices(const Mat& V) {
  if (V.rows() < 1) throw std::invalid_argument("from_vertices: dim must be >= 1");
  if (V.cols() == 0) return empty(static_cast<int>(V.rows()));
  Polytope P;
  P.dim_ = static_cast<int>(V.rows());
  P.empty_ = false;
  P.V_ = V.rows() <= 3 ? reduce_to_extreme(V) : unique_points(V);
  P.has_v_ = true;
  return P;
}

Polytope Polytope::from_both(const Mat& A, const Vec& b, const Mat& V) {
  Polytope P = from_halfspaces(A, b);
  if (P.is_empty()) return P;
  if (V.rows() != P.dim_) throw std::invalid_argument("from_both: dim mismatch");
  P.V_ = V.rows() <= 3 ? reduce_to_extreme(V) : unique_points(V);
  P.has_v_ = true;
  return P;
}

Polytope Polytope::box(const Vec& lo, const Vec& hi) {
  const int d = static_cast<int>(lo.size());
  if (hi.size() != d) throw std::invalid_argument("box: size mismatch");
  Mat A(2 * d, d);
  A << Mat::Identity(d, d), -Mat::Identity(d, d);
  Vec b(2 * d);
  b << hi, -lo;
  Polytope P = from_halfspaces(A, b);
  if ((hi - lo).minCoeff() < 0) return empty(d);
  if (d <= 3) {
    const int n = 1 << d;
    Mat V(d, n);
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < d; ++i) V(i, k) = (k >> i) & 1 ? hi[i] : lo[i];
    P.V_ = reduce_to_extreme(V);
    P.has_v_ = true;
  }
  return P;
}

Polytope Polytope::inf_ball(int dim, double radius) {
  return box(Vec::Constant(dim, -radius), Vec::Constant(dim, radius));
}

Polytope Polytope::empty(int dim) {
  Polytope P;
  P.dim_ = dim;
  P.empty_ = true;
  return P;
}

Polytope Polytope::completed() const {
  if (empty_ || (has_h_ && has_v_)) return *this;
  Polytope P = *this;
  if (!has_v_) {
    Mat V = vertex_enumeration(*this);
    if (V.cols() == 0) return empty(dim_);
    P.V_ = reduce_to_extreme(V);
    P.has_v_ = true;
  }
  if (!has_h_) {
    try {
      Polytope H = facet_enumeration(P.V_);
      P.A_ = H.A_;
      P.b_ = H.b_;
      P.has_h_ = true;
    } catch (const DegenerateHullError&) {
      // Lower-dimensional sets stay in vertex form only.
    }
  }
  return P;
}

Polytope Polytope::linear_map(const Mat& M) const {
  if (M.cols() != dim_) throw std::invalid_argument("linear_map: dim mismatch");
  if (empty_) return empty(static_cast<int>(M.rows()));
  const Polytope C = completed();
  return from_vertices(M * C.V_);
}

Polytope Polytope::translated(const Vec& t) const {
  if (t.size() != dim_) throw std::invalid_argument("translated: dim mismatch");
  if (empty_) return *this;
  Polytope P = *this;
  if (has_h_) P.b_ += P.A_ * t;
  if (has_v_) P.V_.colwise() += t;
  return P;
}

Polytope Polytope::scaled(double s) const {
  if (s <= 0) throw std::invalid_argument("scaled: factor must be positive");
  Polytope P = *this;
  if (has_h_) P.b_ *= s;
  if (has_v_) P.V_ *= s;
  return P;
}

bool Polytope::operator==(const Polytope& o) const {
  if (dim_ != o.dim_ || empty_ != o.empty_ || has_h_ != o.has_h_ || has_v_ != o.has_v_) return false;
  if (empty_) return true;
  if (has_h_ && (A_.rows() != o.A_.rows() || A_ != o.A_ || b_ != o.b_)) return false;
  if (has_v_ && (V_.cols() != o.V_.cols() || V_ != o.V_)) return false;
  return true;
}

bool contains(const Polytope& P, const Vec& x, double tol) {
  if (x.size() != P.dim()) throw std::invalid_argument("contains: dimension mismatch");
  if (P.is_empty()) return false;
  if (P.has_halfspaces()) {
    if (P.num_halfspaces() == 0) return true;
    return (P.A() * x - P.b()).maxCoeff() <= tol;
  }
  // min s  s.t.  -s <= V theta - x <= s, theta in the simplex.
  const Mat& V = P.vertices();
  const int k = static_cast<int>(V.cols()), d = P.dim();
  solver::ConvexProgram lp(k + 1);
  Vec c = Vec::Zero(k + 1);
  c[k] = 1.0;
  lp.set_linear(c);
  Vec lo = Vec::Zero(k + 1);
  lp.set_bounds(lo, Vec::Constant(k + 1, kInf));
  Mat G(2 * d, k + 1);
  G << V, -Vec::Ones(d), -V, -Vec::Ones(d);
  Vec h(2 * d);
  h << x, -x;
  lp.add_inequality("gap", G, h);
  Mat S = Mat::Zero(1, k + 1);
  S.leftCols(k).setOnes();
  lp.add_equality("simplex", S, Vec::Ones(1));
  const auto r = solver::solve(lp);
  if (!r.optimal()) throw SolverError("contains: membership LP failed");
  return r.objective <= tol;
}

double support(const Polytope& P, const Vec& d) {
  if (d.size() != P.dim()) throw std::invalid_argument("support: dimension mismatch");
  if (P.is_empty()) return -kInf;
  if (P.has_vertices()) return (d.transpose() * P.vertices()).maxCoeff();
  solver::ConvexProgram lp(P.dim());
  lp.set_linear(-d);
  lp.add_inequality("set", P.A(), P.b());
  const auto r = solver::solve(lp);
  if (r.status == solver::SolveStatus::kUnbounded) throw std::domain_error("support: unbounded direction");
  if (r.status == solver::SolveStatus::kInfeasible) return -kInf;
  if (!r.optimal()) throw SolverError("support: LP failed");
  return -r.objective;
}

Polytope pontryagin_diff(const Polytope& P, const Polytope& S) {
  if (P.dim() != S.dim()) throw std::invalid_argument("pontryagin_diff: dimension mismatch");
  if (P.is_empty()) return P;
  if (S.is_empty()) throw std::invalid_argument("pontryagin_diff: subtrahend is empty");
  const Polytope Ph = P.has_halfspaces() ? P : P.completed();
  if (!Ph.has_halfspaces()) throw std::invalid_argument("pontryagin_diff: minuend has no halfspace form");
  const Polytope Sv = S.has_vertices() ? S : S.completed();
  Vec b = Ph.b();
  for (int i = 0; i < b.size(); ++i) b[i] -= support(Sv, Ph.A().row(i).transpose());
  Polytope raw = Polytope::from_halfspaces(Ph.A(), b);
  if (raw.is_empty()) return raw;
  if (P.dim() <= 3) {
    const Mat V = vertex_enumeration(raw);
    if (V.cols() == 0) return Polytope::empty(P.dim());
    try {
      const Polytope H = facet_enumeration(V);
      return Polytope::from_both(H.A(), H.b(), V);
    } catch (const DegenerateHullError&) {
      return Polytope::from_both(raw.A(), raw.b(), V);
    }
  }
  // Feasibility LP for higher dimensions.
  solver::ConvexProgram lp(P.dim());
  lp.add_inequality("set", raw.A(), raw.b());
  const auto r = solver::solve(lp);
  if (r.status == solver::SolveStatus::kInfeasible) return Polytope::empty(P.dim());
  return raw;
}

Polytope minkowski_sum(const Polytope& P, const Polytope& S) {
  if (P.dim() != S.dim()) throw std::invalid_argument("minkowski_sum: dimension mismatch");
  if (P.is_empty() || S.is_empty()) return Polytope::empty(P.dim());
  const Polytope Pv = P.has_vertices() ? P : P.completed();
  const Polytope Sv = S.has_vertices() ? S : S.completed();
  const Mat& A = Pv.vertices();
  const Mat& B = Sv.vertices();
  Mat sums(P.dim(), A.cols() * B.cols());
  for (int i = 0; i < A.cols(); ++i)
    for (int j = 0; j < B.cols(); ++j) sums.col(i * B.cols() + j) = A.col(i) + B.col(j);
  return Polytope::from_vertices(sums);
}

Polytope facet_enumeration(const Mat& points) {
  const int d = static_cast<int>(points.rows());
  if (d < 1 || d > 3) throw std::invalid_argument("facet_enumeration: only dim 1..3 supported");
  if (points.cols() < d + 1) throw DegenerateHullError("facet_enumeration: too few points");
  const double scale = scale_of(points);
  if (d == 1) {
    const double lo = points.minCoeff(), hi = points.maxCoeff();
    if (hi - lo <= 1e-9 * scale) throw DegenerateHullError("facet_enumeration: single point");
    Mat A(2, 1);
    A << 1, -1;
    Vec b(2);
    b << hi, -lo;
    Mat V(1, 2);
    V << lo, hi;
    return Polytope::from_both(A, b, V);
  }
  if (d == 2) {
    const std::vector<int> h = convex_hull_2d(points);
    const int k = static_cast<int>(h.size());
    Mat A(k, 2);
    Vec b(k);
    Mat V(2, k);
    for (int i = 0; i < k; ++i) {
      const Eigen::Vector2d p = points.col(h[i]);
      const Eigen::Vector2d q = points.col(h[(i + 1) % k]);
      Eigen::Vector2d n(q.y() - p.y(), p.x() - q.x());
      n.normalize();
      A.row(i) = n.transpose();
      b[i] = n.dot(p);
      V.col(i) = p;
    }
    return Polytope::from_both(A, b, V);
  }
  const auto tris = convex_hull_3d(points);
  std::vector<Eigen::Vector3d> normals;
  std::vector<double> offsets;
  std::vector<char> used(points.cols(), 0);
  for (const auto& t : tris) {
    if (t.normal.norm() < 0.5) continue;
    for (int v : t.v) used[v] = 1;
    bool dup = false;
    for (size_t k = 0; k < normals.size(); ++k) {
      if ((normals[k] - t.normal).norm() < 1e-7 && std::abs(offsets[k] - t.offset) < 1e-7 * scale) {
        dup = true;
        break;
      }
    }
    if (!dup) {
      normals.push_back(t.normal);
      offsets.push_back(t.offset);
    }
  }
  Mat A(normals.size(), 3);
  Vec b(normals.size());
  for (size_t k = 0; k < normals.size(); ++k) {
    A.row(k) = normals[k].transpose();
    // Offset is the max over inputs so every point is satisfied exactly.
    b[k] = (normals[k].transpose() * points).maxCoeff();
  }
  std::vector<int> keep;
  for (int i = 0; i < points.cols(); ++i)
    if (used[i]) keep.push_back(i);
  Mat V(3, keep.size());
  for (size_t i = 0; i < keep.size(); ++i) V.col(i) = points.col(keep[i]);
  return Polytope::from_both(A, b, V);
}

Mat vertex_enumeration(const Polytope& P) {
  if (P.is_empty()) return Mat(P.dim(), 0);
  if (P.has_vertices()) return P.vertices();
  const int d = P.dim();
  if (d > 3) throw std::invalid_argument("vertex_enumeration: only dim <= 3 supported");
  // Reject unbounded input before intersecting facets.
  for (int i = 0; i < d; ++i) {
    Vec e = Vec::Zero(d);
    e[i] = 1.0;
    support(P, e);
    support(P, -e);
  }
  const Mat& A = P.A();
  const Vec& b = P.b();
  const int m = static_cast<int>(b.size());
  const double tol = 1e-9 * std::max(1.0, b.cwiseAbs().maxCoeff());
  std::vector<Vec> pts;
  auto try_point = [&](const Vec& x) {
    if ((A * x - b).maxCoeff() <= tol) pts.push_back(x);
  };
  if (d == 1) {
    double lo = -kInf, hi = kInf;
    for (int i = 0; i < m; ++i) {
      if (A(i, 0) > 0) hi = std::min(hi, b[i] / A(i, 0));
      else lo = std::max(lo, b[i] / A(i, 0));
    }
    if (lo > hi + tol) return Mat(1, 0);
    Mat V(1, 2);
    V << lo, std::max(lo, hi);
    return unique_points(V);
  }
  if (d == 2) {
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        Eigen::Matrix2d M;
        M << A.row(i), A.row(j);
        if (std::abs(M.determinant()) < 1e-12) continue;
        try_point(M.inverse() * Eigen::Vector2d(b[i], b[j]));
      }
  } else {
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        for (int k = j + 1; k < m; ++k) {
          Eigen::Matrix3d M;
          M << A.row(i), A.row(j), A.row(k);
          if (std::abs(M.determinant()) < 1e-12) continue;
          try_point(M.partialPivLu().solve(Eigen::Vector3d(b[i], b[j], b[k])));
        }
  }
  Mat V(d, pts.size());
  for (size_t i = 0; i < pts.size(); ++i) V.col(i) = pts[i];
  return reduce_to_extreme(V);
}

Polytope approximate_min_rpi(const Mat& Acl, const Polytope& W, double eps, int max_iterations) {
  const int d = W.dim();
  if (Acl.rows() != d || Acl.cols() != d) throw std::invalid_argument("approximate_min_rpi: shape mismatch");
  if (W.is_empty()) throw std::invalid_argument("approximate_min_rpi: empty disturbance set");
  Eigen::EigenSolver<Mat> es(Acl, false);
  if (es.eigenvalues().cwiseAbs().maxCoeff() >= 1.0)
    throw std::domain_error("approximate_min_rpi: closed loop is not stable");
  const Polytope Wc = W.completed();
  if (Wc.vertices().cwiseAbs().maxCoeff() == 0.0) return Polytope::from_vertices(Mat::Zero(d, 1));
  if (!Wc.has_halfspaces() || Wc.b().minCoeff() <= 0)
    throw std::invalid_argument("approximate_min_rpi: W must contain the origin in its interior");
  Polytope F = Wc;  // F_s = sum_{i<s} Acl^i W
  Mat Ap = Acl;     // Acl^s
  for (int s = 1; s <= max_iterations; ++s) {
    double alpha = 0.0;
    for (int i = 0; i < Wc.num_halfspaces(); ++i)
      alpha = std::max(alpha, support(Wc, Ap.transpose() * Wc.A().row(i).transpose()) / Wc.b()[i]);
    if (alpha <= eps) return Polytope::from_vertices(F.vertices() / (1.0 - alpha)).completed();
    F = minkowski_sum(F, Wc.linear_map(Ap));
    Ap = Acl * Ap;
  }
  throw std::runtime_error("approximate_min_rpi: alpha did not fall below eps within the iteration cap");
}

namespace {

double segment_dist2(const Vec& x, const Vec& a, const Vec& b) {
  const Vec ab = b - a;
  const double len2 = ab.squaredNorm();
  double t = len2 > 0 ? (x - a).dot(ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return (x - (a + t * ab)).squaredNorm();
}

}  // namespace

double squared_distance(const Polytope& P, const Vec& x) {
  if (x.size() != P.dim()) throw std::invalid_argument("squared_distance: dimension mismatch");
  if (P.is_empty()) throw std::invalid_argument("squared_distance: empty set");
  if (P.dim() > 2) return squared_distance_qp(P, x);
  const Polytope C = P.has_vertices() ? P : P.completed();
  const Mat& V = C.vertices();
  if (P.dim() == 1) {
    const double lo = V.minCoeff(), hi = V.maxCoeff();
    const double g = x[0] < lo ? lo - x[0] : (x[0] > hi ? x[0] - hi : 0.0);
    return g * g;
  }
  if (V.cols() == 1) return (x - V.col(0)).squaredNorm();
  if (V.cols() == 2) return segment_dist2(x, V.col(0), V.col(1));
  if (C.has_halfspaces() && (C.A() * x - C.b()).maxCoeff() <= 0.0) return 0.0;
  double best = kInf;
  const int k = static_cast<int>(V.cols());
  for (int i = 0; i < k; ++i) best = std::min(best, segment_dist2(x, V.col(i), V.col((i + 1) % k)));
  return best;
}

double squared_distance_qp(const Polytope& P, const Vec& x) {
  const int d = P.dim();
  const Polytope C = P.has_halfspaces() ? P : P.completed();
  if (C.has_halfspaces()) {
    solver::ConvexProgram qp(d);
    qp.set_quadratic(2.0 * Mat::Identity(d, d));
    qp.set_linear(-2.0 * x);
    qp.add_inequality("set", C.A(), C.b());
    const auto r = solver::solve(qp);
    if (!r.optimal()) throw SolverError("squared_distance_qp: projection QP failed");
    return std::max(0.0, (x - r.primal).squaredNorm());
  }
  const Mat& V = C.vertices();
  const int k = static_cast<int>(V.cols());
  solver::ConvexProgram qp(k);
  qp.set_quadratic(2.0 * V.transpose() * V);
  qp.set_linear(-2.0 * V.transpose() * x);
  qp.set_bounds(Vec::Zero(k), Vec::Constant(k, kInf));
  qp.add_equality("simplex", Mat::Ones(1, k), Vec::Ones(1));
  const auto r = solver::solve(qp);
  if (!r.optimal()) throw SolverError("squared_distance_qp: projection QP failed");
  return std::max(0.0, (x - V * r.primal).squaredNorm());
}

std::string serialize(const Polytope& P) {
  std::ostringstream os;
  os << "polytope " << P.dim();
  if (P.is_empty()) {
    os << " empty\n";
    return os.str();
  }
  os << "\n";
  if (P.has_halfspaces()) {
    os << "halfspaces " << P.num_halfspaces() << "\n";
    for (int i = 0; i < P.num_halfspaces(); ++i) {
      Vec row(P.dim() + 1);
      row << P.A().row(i).transpose(), P.b()[i];
      os << io::format_row(row) << "\n";
    }
  }
  if (P.has_vertices()) {
    os << "vertices " << P.num_vertices() << "\n";
    for (int i = 0; i < P.num_vertices(); ++i) os << io::format_row(P.vertices().col(i)) << "\n";
  }
  os << "end\n";
  return os.str();
}

Polytope parse_polytope(const std::string& text) {
  std::istringstream is(text);
  std::string tag;
  int dim = 0;
  if (!(is >> tag >> dim) || tag != "polytope" || dim < 1)
    throw std::invalid_argument("parse_polytope: bad header");
  std::string line;
  std::getline(is, line);
  if (line.find("empty") != std::string::npos) return Polytope::empty(dim);
  auto read = [&](int k) {
    Vec v(k);
    for (int i = 0; i < k; ++i) {
      std::string s;
      if (!(is >> s)) throw std::invalid_argument("parse_polytope: truncated");
      v[i] = io::parse_number(s);
    }
    return v;
  };
  Polytope P = Polytope::empty(dim);
  Mat A, V;
  Vec b;
  bool has_h = false, has_v = false;
  while (is >> tag && tag != "end") {
    int k = 0;
    is >> k;
    if (tag == "halfspaces") {
      A.resize(k, dim);
      b.resize(k);
      for (int i = 0; i < k; ++i) {
        const Vec row = read(dim + 1);
        A.row(i) = row.head(dim).transpose();
        b[i] = row[dim];
      }
      has_h = true;
    } else if (tag == "vertices") {
      V.resize(dim, k);
      for (int i = 0; i < k; ++i) V.col(i) = read(dim);
      has_v = true;
    } else {
      throw std::invalid_argument("parse_polytope: unknown section " + tag);
    }
  }
  if (tag != "end") throw std::invalid_argument("parse_polytope: missing end");
  if (has_h && has_v) return Polytope::from_both(A, b, V);
  if (has_h) return Polytope::from_halfspaces(A, b);
  if (has_v) return Polytope::from_vertices(V);
  throw std::invalid_argument("parse_polytope: no representation");
}

}  // namespace lmpc::geometry
