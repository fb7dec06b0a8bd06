#include "lmpc/geometry/hull.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

namespace lmpc::geometry {

std::vector<int> convex_hull_2d(const Mat& pts, double tol) {
  const int n = static_cast<int>(pts.cols());
  if (pts.rows() != 2) throw std::invalid_argument("convex_hull_2d: points must be 2 x N");
  if (n < 3) throw DegenerateHullError("convex_hull_2d: fewer than 3 points");
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (pts(0, a) != pts(0, b)) return pts(0, a) < pts(0, b);
    return pts(1, a) < pts(1, b);
  });
  const double scale = std::max(1.0, pts.cwiseAbs().maxCoeff());
  const double eps = tol * scale * scale;
  auto cross = [&](int o, int a, int b) {
    return (pts(0, a) - pts(0, o)) * (pts(1, b) - pts(1, o)) -
           (pts(1, a) - pts(1, o)) * (pts(0, b) - pts(0, o));
  };
  std::vector<int> hull(2 * n);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], idx[i]) <= eps) --k;
    hull[k++] = idx[i];
  }
  for (int i = n - 2, t = k + 1; i >= 0; --i) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], idx[i]) <= eps) --k;
    hull[k++] = idx[i];
  }
  hull.resize(std::max(k - 1, 0));
  if (hull.size() < 3) throw DegenerateHullError("convex_hull_2d: points are collinear");
  return hull;
}

namespace {

using V3 = Eigen::Vector3d;

struct Face {
  std::array<int, 3> v;
  V3 n;
  double d;
  std::vector<int> outside;
  bool alive = true;
  bool visited = false;
};

inline uint64_t edge_key(int a, int b) {
  return (static_cast<uint64_t>(static_cast<uint32_t>(a)) << 32) | static_cast<uint32_t>(b);
}

class QuickHull {
 public:
  QuickHull(const Mat& pts, double tol) : P_(pts) {
    scale_ = std::max(1.0, pts.cwiseAbs().maxCoeff());
    eps_ = tol * scale_;
  }

  std::vector<HullTriangle> run();

 private:
  V3 p(int i) const { return P_.col(i); }
  int make_face(int a, int b, int c);
  double dist(const Face& f, int i) const { return f.n.dot(p(i)) - f.d; }
  void kill_face(int f);

  const Mat& P_;
  double scale_;
  double eps_;
  std::vector<Face> faces_;
  std::unordered_map<uint64_t, int> edges_;
};

int QuickHull::make_face(int a, int b, int c) {
  Face f;
  f.v = {a, b, c};
  V3 n = (p(b) - p(a)).cross(p(c) - p(a));
  const double len = n.norm();
  f.n = len > 0 ? V3(n / len) : V3::Zero();
  f.d = f.n.dot(p(a));
  faces_.push_back(std::move(f));
  const int id = static_cast<int>(faces_.size()) - 1;
  edges_[edge_key(a, b)] = id;
  edges_[edge_key(b, c)] = id;
  edges_[edge_key(c, a)] = id;
  return id;
}

void QuickHull::kill_face(int id) {
  Face& f = faces_[id];
  f.alive = false;
  for (int e = 0; e < 3; ++e) {
    auto it = edges_.find(edge_key(f.v[e], f.v[(e + 1) % 3]));
    if (it != edges_.end() && it->second == id) edges_.erase(it);
  }
}

std::vector<HullTriangle> QuickHull::run() {
  const int n = static_cast<int>(P_.cols());
  if (n < 4) throw DegenerateHullError("convex_hull_3d: fewer than 4 points");
  // Initial tetrahedron from extreme points.
  int i0 = 0, i1 = 0;
  double best = -1;
  for (int ax = 0; ax < 3; ++ax) {
    int lo = 0, hi = 0;
    for (int i = 1; i < n; ++i) {
      if (P_(ax, i) < P_(ax, lo)) lo = i;
      if (P_(ax, i) > P_(ax, hi)) hi = i;
    }
    const double s = (p(hi) - p(lo)).norm();
    if (s > best) {
      best = s;
      i0 = lo;
      i1 = hi;
    }
  }
  if (best <= eps_) throw DegenerateHullError("convex_hull_3d: all points coincide");
  const V3 dir = (p(i1) - p(i0)).normalized();
  int i2 = -1;
  best = eps_;
  for (int i = 0; i < n; ++i) {
    const V3 r = p(i) - p(i0);
    const double dl = (r - r.dot(dir) * dir).norm();
    if (dl > best) {
      best = dl;
      i2 = i;
    }
  }
  if (i2 < 0) throw DegenerateHullError("convex_hull_3d: points are collinear");
  const V3 pn = (p(i1) - p(i0)).cross(p(i2) - p(i0)).normalized();
  int i3 = -1;
  best = eps_;
  for (int i = 0; i < n; ++i) {
    const double dp = std::abs(pn.dot(p(i) - p(i0)));
    if (dp > best) {
      best = dp;
      i3 = i;
    }
  }
  if (i3 < 0) throw DegenerateHullError("convex_hull_3d: points are coplanar");
  if (pn.dot(p(i3) - p(i0)) > 0) std::swap(i1, i2);  // make (i0,i1,i2) face away from i3
  make_face(i0, i1, i2);
  make_face(i0, i3, i1);
  make_face(i1, i3, i2);
  make_face(i2, i3, i0);

  for (int i = 0; i < n; ++i) {
    if (i == i0 || i == i1 || i == i2 || i == i3) continue;
    for (int f = 0; f < 4; ++f) {
      if (dist(faces_[f], i) > eps_) {
        faces_[f].outside.push_back(i);
        break;
      }
    }
  }

  std::vector<int> stack = {0, 1, 2, 3};
  std::vector<int> visible, frontier;
  std::vector<std::pair<int, int>> horizon;
  while (!stack.empty()) {
    const int fid = stack.back();
    stack.pop_back();
    if (!faces_[fid].alive || faces_[fid].outside.empty()) continue;
    // Farthest outside point.
    int apex = -1;
    double far = -1;
    for (int i : faces_[fid].outside) {
      const double d = dist(faces_[fid], i);
      if (d > far) {
        far = d;
        apex = i;
      }
    }
    // Visible region by flood fill across shared edges.
    visible.clear();
    horizon.clear();
    frontier = {fid};
    faces_[fid].visited = true;
    while (!frontier.empty()) {
      const int f = frontier.back();
      frontier.pop_back();
      visible.push_back(f);
      for (int e = 0; e < 3; ++e) {
        const int a = faces_[f].v[e], b = faces_[f].v[(e + 1) % 3];
        auto it = edges_.find(edge_key(b, a));
        if (it == edges_.end()) throw std::runtime_error("convex_hull_3d: broken adjacency");
        const int g = it->second;
        if (faces_[g].visited) continue;
        if (dist(faces_[g], apex) > eps_) {
          faces_[g].visited = true;
          frontier.push_back(g);
        } else {
          horizon.emplace_back(a, b);
        }
      }
    }
    std::vector<int> orphans;
    for (int f : visible) {
      for (int i : faces_[f].outside)
        if (i != apex) orphans.push_back(i);
      faces_[f].outside.clear();
      kill_face(f);
    }
    std::vector<int> fresh;
    for (auto [a, b] : horizon) fresh.push_back(make_face(a, b, apex));
    for (int i : orphans) {
      for (int f : fresh) {
        if (dist(faces_[f], i) > eps_) {
          faces_[f].outside.push_back(i);
          break;
        }
      }
    }
    for (int f : fresh)
      if (!faces_[f].outside.empty()) stack.push_back(f);
  }

  std::vector<HullTriangle> out;
  for (const Face& f : faces_) {
    if (!f.alive) continue;
    out.push_back({f.v, f.n, f.d});
  }
  return out;
}

}  // namespace

std::vector<HullTriangle> convex_hull_3d(const Mat& pts, double tol) {
  if (pts.rows() != 3) throw std::invalid_argument("convex_hull_3d: points must be 3 x N");
  QuickHull qh(pts, tol);
  return qh.run();
}

}  // namespace lmpc::geometry
