#pragma once

#include <array>
#include <vector>

#include "lmpc/common.h"

namespace lmpc::valuefn {

/// Lower convex envelope of scattered values over a planar point set, i.e.
/// min { J.lambda : X lambda = y, sum lambda = 1, lambda >= 0 } in closed
/// form. Built once from the lifted points (x, J); queries are a bucket
/// lookup plus a few plane evaluations.
class PlanarLowerHull {
 public:
  PlanarLowerHull() = default;
  /// X is 2 x l. Throws DegenerateHullError if the points do not span the plane.
  PlanarLowerHull(const Mat& X, const Vec& J);

  struct Query {
    bool inside = false;
    double value = 0.0;
    double slope_right = 0.0;  // one-sided derivatives along the query direction
    double slope_left = 0.0;
    int triangle = -1;         // triangle attaining the value
  };

  /// Value at y (+inf outside the hull of the points).
  double value(const Eigen::Vector2d& y) const;
  /// Value plus one-sided directional derivatives along d.
  Query query(const Eigen::Vector2d& y, const Eigen::Vector2d& d) const;
  /// Convex coefficients over the original columns (three nonzeros) attaining
  /// the value. Empty when y is outside.
  Vec coefficients(const Eigen::Vector2d& y) const;

  int num_triangles() const { return static_cast<int>(tris_.size()); }
  int num_points() const { return num_points_; }

 private:
  struct Tri {
    std::array<int, 3> v;
    Eigen::Vector2d slope;  // value = slope.y + offset on this triangle
    double offset;
    Eigen::Matrix2d to_bary;  // barycentric weights 1,2 = to_bary * (y - p0)
    Eigen::Vector2d origin;
  };

  bool bary(const Tri& t, const Eigen::Vector2d& y, Eigen::Vector3d& w) const;
  template <typename F>
  void for_candidates(const Eigen::Vector2d& y, F&& f) const;

  Mat X_;
  int num_points_ = 0;
  std::vector<Tri> tris_;
  Eigen::Vector2d lo_ = Eigen::Vector2d::Zero(), cell_ = Eigen::Vector2d::Ones();
  int grid_ = 1;
  std::vector<std::vector<int>> buckets_;
};

}  // namespace lmpc::valuefn
