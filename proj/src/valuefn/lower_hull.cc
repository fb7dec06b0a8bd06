#include "lmpc/valuefn/lower_hull.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lmpc/geometry/hull.h"

namespace lmpc::valuefn {

namespace {
constexpr double kBaryTol = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

PlanarLowerHull::PlanarLowerHull(const Mat& X, const Vec& J) : X_(X) {
  if (X.rows() != 2 || X.cols() != J.size())
    throw std::invalid_argument("PlanarLowerHull: expected 2 x l points and l values");
  const int l = static_cast<int>(X.cols());
  num_points_ = l;
  // Hull in normalized coordinates, plus a point high above the centre so
  // that equal values never make the cloud flat.
  const Eigen::Vector2d xmin = X.rowwise().minCoeff(), xmax = X.rowwise().maxCoeff();
  const Eigen::Vector2d center = 0.5 * (xmin + xmax);
  const double xs = std::max((xmax - xmin).maxCoeff() / 2, 1e-300);
  const double jmin = J.minCoeff(), jspan = std::max(J.maxCoeff() - jmin, 1.0);
  Mat lifted(3, l + 1);
  for (int i = 0; i < l; ++i) {
    lifted(0, i) = (X(0, i) - center(0)) / xs;
    lifted(1, i) = (X(1, i) - center(1)) / xs;
    lifted(2, i) = (J(i) - jmin) / jspan;
  }
  lifted.col(l) << lifted.row(0).head(l).mean(), lifted.row(1).head(l).mean(), 3.0;
  const auto faces = geometry::convex_hull_3d(lifted);

  for (const auto& f : faces) {
    if (f.normal.norm() < 0.5 || f.normal(2) >= -1e-9) continue;
    if (f.v[0] == l || f.v[1] == l || f.v[2] == l) continue;
    Tri t;
    t.v = f.v;
    Eigen::Matrix3d M;
    Eigen::Vector3d rhs;
    for (int k = 0; k < 3; ++k) {
      M.row(k) << X(0, f.v[k]), X(1, f.v[k]), 1.0;
      rhs(k) = J(f.v[k]);
    }
    Eigen::Matrix2d E;
    E.col(0) = X.col(f.v[1]) - X.col(f.v[0]);
    E.col(1) = X.col(f.v[2]) - X.col(f.v[0]);
    const double det = E.determinant();
    if (std::abs(det) <= 1e-13 * xs * xs) continue;  // sliver
    const Eigen::Vector3d plane = M.fullPivLu().solve(rhs);
    t.slope = plane.head<2>();
    t.offset = plane(2);
    t.to_bary = E.inverse();
    t.origin = X.col(f.v[0]);
    tris_.push_back(t);
  }
  if (tris_.empty()) throw DegenerateHullError("PlanarLowerHull: no lower faces");

  grid_ = std::clamp(static_cast<int>(std::sqrt(static_cast<double>(tris_.size()))), 1, 256);
  lo_ = xmin;
  cell_ = ((xmax - xmin) / grid_).cwiseMax(1e-300);
  buckets_.assign(grid_ * grid_, {});
  for (int id = 0; id < static_cast<int>(tris_.size()); ++id) {
    Eigen::Vector2d a = X.col(tris_[id].v[0]), b = a;
    for (int k = 1; k < 3; ++k) {
      a = a.cwiseMin(X.col(tris_[id].v[k]));
      b = b.cwiseMax(X.col(tris_[id].v[k]));
    }
    const auto cell_of = [&](double v, int ax) {
      return std::clamp(static_cast<int>(std::floor((v - lo_(ax)) / cell_(ax))), 0, grid_ - 1);
    };
    // Pad by a relative hair so points on cell borders see their triangles.
    const double pad = 1e-9 * xs;
    for (int i = cell_of(a(0) - pad, 0); i <= cell_of(b(0) + pad, 0); ++i)
      for (int j = cell_of(a(1) - pad, 1); j <= cell_of(b(1) + pad, 1); ++j)
        buckets_[i * grid_ + j].push_back(id);
  }
}

bool PlanarLowerHull::bary(const Tri& t, const Eigen::Vector2d& y, Eigen::Vector3d& w) const {
  const Eigen::Vector2d r = t.to_bary * (y - t.origin);
  w << 1.0 - r(0) - r(1), r(0), r(1);
  return w.minCoeff() >= -kBaryTol;
}

template <typename F>
void PlanarLowerHull::for_candidates(const Eigen::Vector2d& y, F&& f) const {
  const double slack = 1e-9;
  int cell[2];
  for (int ax = 0; ax < 2; ++ax) {
    const double s = (y(ax) - lo_(ax)) / cell_(ax);
    if (s < -slack * grid_ || s > grid_ * (1 + slack)) return;
    cell[ax] = std::clamp(static_cast<int>(std::floor(s)), 0, grid_ - 1);
  }
  for (int id : buckets_[cell[0] * grid_ + cell[1]]) f(id);
}

double PlanarLowerHull::value(const Eigen::Vector2d& y) const {
  double best = -kInf;
  Eigen::Vector3d w;
  for_candidates(y, [&](int id) {
    if (bary(tris_[id], y, w)) best = std::max(best, tris_[id].slope.dot(y) + tris_[id].offset);
  });
  return best == -kInf ? kInf : best;
}

PlanarLowerHull::Query PlanarLowerHull::query(const Eigen::Vector2d& y,
                                              const Eigen::Vector2d& d) const {
  Query q;
  q.value = -kInf;
  q.slope_right = -kInf;
  q.slope_left = kInf;
  Eigen::Vector3d w;
  for_candidates(y, [&](int id) {
    const Tri& t = tris_[id];
    if (!bary(t, y, w)) return;
    q.inside = true;
    const double v = t.slope.dot(y) + t.offset;
    if (v > q.value) {
      q.value = v;
      q.triangle = id;
    }
    const double s = t.slope.dot(d);
    q.slope_right = std::max(q.slope_right, s);
    q.slope_left = std::min(q.slope_left, s);
  });
  if (!q.inside) {
    q.value = kInf;
    q.slope_right = q.slope_left = 0.0;
  }
  return q;
}

Vec PlanarLowerHull::coefficients(const Eigen::Vector2d& y) const {
  const Query q = query(y, Eigen::Vector2d::Zero());
  if (!q.inside) return Vec();
  const Tri& t = tris_[q.triangle];
  Eigen::Vector3d w;
  bary(t, y, w);
  w = w.cwiseMax(0.0);
  w /= w.sum();
  Vec lambda = Vec::Zero(num_points_);
  for (int k = 0; k < 3; ++k) lambda(t.v[k]) += w(k);
  return lambda;
}

}  // namespace lmpc::valuefn
