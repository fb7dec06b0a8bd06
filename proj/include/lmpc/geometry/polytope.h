#pragma once

#include <string>

#include "lmpc/common.h"

namespace lmpc::geometry {

/// Convex polytope in halfspace form {x : A x <= b}, vertex form conv(V), or
/// both. Rows of A have unit Euclidean norm. Immutable once built.
class Polytope {
 public:
  /// The empty set in R^1. Prefer Polytope::empty(dim).
  Polytope() : dim_(1), empty_(true) {}

  static Polytope from_halfspaces(const Mat& A, const Vec& b);
  /// Columns of V are points; redundant points are dropped for dim <= 3.
  static Polytope from_vertices(const Mat& V);
  /// Trusts the caller that both describe the same set.
  static Polytope from_both(const Mat& A, const Vec& b, const Mat& V);
  static Polytope box(const Vec& lo, const Vec& hi);
  static Polytope inf_ball(int dim, double radius);
  static Polytope empty(int dim);

  int dim() const { return dim_; }
  bool is_empty() const { return empty_; }
  bool has_halfspaces() const { return has_h_; }
  bool has_vertices() const { return has_v_; }
  const Mat& A() const& { return A_; }
  const Vec& b() const& { return b_; }
  /// dim x k, one vertex per column.
  const Mat& vertices() const& { return V_; }
  // Temporaries hand out copies so that references never dangle.
  Mat A() && { return std::move(A_); }
  Vec b() && { return std::move(b_); }
  Mat vertices() && { return std::move(V_); }
  int num_halfspaces() const { return static_cast<int>(b_.size()); }
  int num_vertices() const { return static_cast<int>(V_.cols()); }

  /// Copy with the missing representation filled in (dim <= 3 for vertices).
  Polytope completed() const;

  /// {M v : v in P}, vertex form.
  Polytope linear_map(const Mat& M) const;
  Polytope translated(const Vec& t) const;
  Polytope scaled(double s) const;

  bool operator==(const Polytope& o) const;

 private:
  int dim_ = 1;
  bool empty_ = false;
  bool has_h_ = false;
  bool has_v_ = false;
  Mat A_;
  Vec b_;
  Mat V_;
};

/// x in P within tol; halfspaces if present, else a convex-coefficient LP.
bool contains(const Polytope& P, const Vec& x, double tol = 1e-9);

/// max_{x in P} d.x. Throws std::domain_error when unbounded in d.
double support(const Polytope& P, const Vec& d);

/// {x : A x <= b - support(S, a_i)}; returns Polytope::empty when the result is empty.
Polytope pontryagin_diff(const Polytope& P, const Polytope& S);

/// Vertex form of P + S.
Polytope minkowski_sum(const Polytope& P, const Polytope& S);

/// Halfspace form of conv(points) for dim <= 3 (points are columns).
/// Throws DegenerateHullError for lower-dimensional input.
Polytope facet_enumeration(const Mat& points);

/// Vertices of a bounded halfspace polytope, dim <= 3.
Mat vertex_enumeration(const Polytope& P);

/// Outer approximation of the minimal RPI set of x+ = Acl x + w, w in W.
Polytope approximate_min_rpi(const Mat& Acl, const Polytope& W, double eps = 1e-3,
                             int max_iterations = 200);

/// Squared Euclidean distance from x to P (projection). Closed form for
/// dim <= 2, a projection QP otherwise.
double squared_distance(const Polytope& P, const Vec& x);
/// Same quantity, always through the QP backend. Used as a cross-check.
double squared_distance_qp(const Polytope& P, const Vec& x);

/// Drops duplicate columns (per-coordinate tolerance).
Mat unique_points(const Mat& pts, double tol = 1e-9);

std::string serialize(const Polytope& P);
Polytope parse_polytope(const std::string& text);

}  // namespace lmpc::geometry
