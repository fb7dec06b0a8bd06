#pragma once

#include <array>
#include <vector>

#include "lmpc/common.h"

namespace lmpc::geometry {

/// Indices of the extreme points of a planar cloud (columns of `pts`, 2 x N),
/// counter-clockwise, collinear points dropped. Throws DegenerateHullError if
/// the cloud is collinear.
std::vector<int> convex_hull_2d(const Mat& pts, double tol = 1e-9);

struct HullTriangle {
  std::array<int, 3> v;     // point indices, counter-clockwise seen from outside
  Eigen::Vector3d normal;   // unit outward normal
  double offset;            // normal . x <= offset on the hull
};

/// Triangulated boundary of the convex hull of a 3 x N cloud (quickhull).
/// Throws DegenerateHullError for coplanar input.
std::vector<HullTriangle> convex_hull_3d(const Mat& pts, double tol = 1e-10);

}  // namespace lmpc::geometry
