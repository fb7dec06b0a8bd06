#include "lmpc/geometry/polytope.h"

#include <random>

#include <gtest/gtest.h>

#include "lmpc/geometry/hull.h"

namespace lmpc::geometry {
namespace {

Mat points2(std::initializer_list<std::pair<double, double>> pts) {
  Mat M(2, pts.size());
  int i = 0;
  for (auto [x, y] : pts) M.col(i++) << x, y;
  return M;
}

Vec v2(double a, double b) { return (Vec(2) << a, b).finished(); }

// Brute-force hull edges: the segment (i,j) is on the hull iff all points lie
// on one side of its line.
int brute_force_edge_count(const Mat& P) {
  int edges = 0;
  const int n = static_cast<int>(P.cols());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      bool all_left = true;
      for (int k = 0; k < n; ++k) {
        const double c = (P(0, j) - P(0, i)) * (P(1, k) - P(1, i)) - (P(1, j) - P(1, i)) * (P(0, k) - P(0, i));
        if (c < -1e-12) all_left = false;
        // Collinear points strictly between i and j make (i,j) not an edge of the reduced hull.
        if (std::abs(c) <= 1e-12 && k != i && k != j) {
          const double t = (P.col(k) - P.col(i)).dot(P.col(j) - P.col(i)) / (P.col(j) - P.col(i)).squaredNorm();
          if (t < 0 || t > 1) all_left = false;
        }
      }
      if (all_left) ++edges;
    }
  return edges;
}

TEST(Contains, SpecExamples) {
  const Polytope box = Polytope::inf_ball(2, 1.0);
  EXPECT_TRUE(contains(box, v2(0, 0), 1e-9));
  EXPECT_FALSE(contains(box, v2(1 + 1e-3, 0), 1e-9));
  const Polytope W = Polytope::inf_ball(2, 1.0 / 3.0);
  EXPECT_TRUE(contains(W, v2(1.0 / 3.0, 1.0 / 3.0), 1e-9));
  EXPECT_THROW(contains(W, Vec::Zero(3)), std::invalid_argument);
}

TEST(Contains, VertexOnlyUsesLp) {
  const Polytope tri = Polytope::from_vertices(points2({{0, 0}, {1, 0}, {0, 1}}));
  ASSERT_FALSE(tri.has_halfspaces());
  EXPECT_TRUE(contains(tri, v2(0.25, 0.25)));
  EXPECT_TRUE(contains(tri, v2(0.5, 0.5), 1e-9));
  EXPECT_FALSE(contains(tri, v2(0.6, 0.6), 1e-9));
}

TEST(Support, SpecExamples) {
  EXPECT_DOUBLE_EQ(support(Polytope::inf_ball(2, 1.0), v2(1, 0)), 1.0);
  EXPECT_NEAR(support(Polytope::inf_ball(2, 1.0 / 3.0), v2(1, 1)), 2.0 / 3.0, 1e-15);
  EXPECT_DOUBLE_EQ(support(Polytope::from_vertices(points2({{0, 0}, {1, 0}, {0, 1}})), v2(1, 1)), 1.0);
}

TEST(Support, LpAgreesWithVertices) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  Mat P(2, 15);
  for (int i = 0; i < P.size(); ++i) P(i) = g(rng);
  const Polytope hv = facet_enumeration(P);
  const Polytope h = Polytope::from_halfspaces(hv.A(), hv.b());
  for (int t = 0; t < 50; ++t) {
    const Vec d = v2(g(rng), g(rng));
    EXPECT_NEAR(support(h, d), support(hv, d), 1e-9);
  }
  Mat A(1, 2);
  A << 1, 0;
  EXPECT_THROW(support(Polytope::from_halfspaces(A, Vec::Ones(1)), v2(-1, 0)), std::domain_error);
}

TEST(PontryaginDiff, BoxMinusBox) {
  const Polytope X = Polytope::box(v2(-10, -40), v2(40, 10));
  const Polytope W = Polytope::inf_ball(2, 1.0 / 3.0);
  const Polytope D = pontryagin_diff(X, W);
  ASSERT_FALSE(D.is_empty());
  const Polytope E = Polytope::box(v2(-10 + 1.0 / 3, -40 + 1.0 / 3), v2(40 - 1.0 / 3, 10 - 1.0 / 3));
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(support(D, E.A().row(i).transpose()), E.b()[i], 1e-12);
}

TEST(PontryaginDiff, IdentityAndEmpty) {
  const Polytope X = Polytope::box(v2(-1, -2), v2(3, 4));
  const Polytope D = pontryagin_diff(X, Polytope::from_vertices(Mat::Zero(2, 1)));
  for (int i = 0; i < X.num_halfspaces(); ++i)
    EXPECT_NEAR(support(D, X.A().row(i).transpose()), X.b()[i], 1e-12);
  EXPECT_TRUE(pontryagin_diff(Polytope::inf_ball(2, 1.0), Polytope::inf_ball(2, 2.0)).is_empty());
}

TEST(PontryaginDiff, VertexSumsStayInside) {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> g(0.0, 3.0);
  Mat P(2, 30);
  for (int i = 0; i < P.size(); ++i) P(i) = g(rng);
  const Polytope S = facet_enumeration(P);
  const Polytope W = Polytope::inf_ball(2, 0.4);
  const Polytope D = pontryagin_diff(S, W);
  ASSERT_FALSE(D.is_empty());
  for (int i = 0; i < D.num_vertices(); ++i)
    for (int j = 0; j < W.num_vertices(); ++j)
      EXPECT_TRUE(contains(S, D.vertices().col(i) + W.vertices().col(j), 1e-9));
}

TEST(MinkowskiSum, SpecExamples) {
  const Polytope s = minkowski_sum(Polytope::inf_ball(2, 1), Polytope::inf_ball(2, 1));
  EXPECT_EQ(s.num_vertices(), 4);
  EXPECT_DOUBLE_EQ(support(s, v2(1, 1)), 4.0);
  const Polytope sq = minkowski_sum(Polytope::from_vertices(points2({{0, 0}, {1, 0}})),
                                    Polytope::from_vertices(points2({{0, 0}, {0, 1}})));
  EXPECT_EQ(sq.num_vertices(), 4);
  EXPECT_TRUE(contains(sq, v2(0.5, 0.5)));
  const Polytope P = Polytope::from_vertices(points2({{0, 0}, {2, 0}, {1, 3}}));
  EXPECT_EQ(minkowski_sum(P, Polytope::from_vertices(Mat::Zero(2, 1))).vertices(), P.vertices());
  EXPECT_THROW(minkowski_sum(P, Polytope::inf_ball(3, 1)), std::invalid_argument);
}

TEST(FacetEnumeration, SquareAndInteriorPoint) {
  const Polytope s = facet_enumeration(points2({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}));
  EXPECT_EQ(s.num_halfspaces(), 4);
  const Polytope t = facet_enumeration(points2({{-1, -1}, {1, -1}, {0, 0}, {1, 1}, {-1, 1}}));
  EXPECT_EQ(t.num_halfspaces(), 4);
  EXPECT_EQ(t.num_vertices(), 4);
  EXPECT_THROW(facet_enumeration(points2({{0, 0}, {1, 1}, {2, 2}})), DegenerateHullError);
}

TEST(FacetEnumeration, RandomCloudMatchesBruteForce) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-5, 5);
  for (int trial = 0; trial < 20; ++trial) {
    Mat P(2, 20);
    for (int i = 0; i < P.size(); ++i) P(i) = u(rng);
    const Polytope H = facet_enumeration(P);
    EXPECT_EQ(H.num_halfspaces(), brute_force_edge_count(P));
    for (int i = 0; i < P.cols(); ++i) EXPECT_LE((H.A() * P.col(i) - H.b()).maxCoeff(), 1e-8);
    for (int f = 0; f < H.num_halfspaces(); ++f) {
      int supporting = 0;
      for (int i = 0; i < P.cols(); ++i)
        if (std::abs(H.A().row(f).dot(P.col(i)) - H.b()[f]) < 1e-8) ++supporting;
      EXPECT_GE(supporting, 2);
    }
  }
}

TEST(FacetEnumeration, IdempotentUpToNormalization) {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> g;
  Mat P(2, 25);
  for (int i = 0; i < P.size(); ++i) P(i) = g(rng);
  const Polytope a = facet_enumeration(P);
  const Polytope b = facet_enumeration(a.vertices());
  ASSERT_EQ(a.num_halfspaces(), b.num_halfspaces());
  EXPECT_LT((a.A() - b.A()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((a.b() - b.b()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(FacetEnumeration, ThreeDimensionalCube) {
  Mat C(3, 9);
  for (int k = 0; k < 8; ++k) C.col(k) << (k & 1 ? 1 : -1), (k & 2 ? 1 : -1), (k & 4 ? 1 : -1);
  C.col(8) << 0.1, 0.2, -0.3;
  const Polytope H = facet_enumeration(C);
  EXPECT_EQ(H.num_halfspaces(), 6);
  EXPECT_EQ(H.num_vertices(), 8);
  Mat flat(3, 4);
  flat << 0, 1, 0, 1, 0, 0, 1, 1, 0, 0, 0, 0;
  EXPECT_THROW(facet_enumeration(flat), DegenerateHullError);
}

TEST(Hull3d, RandomCloudContainment) {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> g;
  Mat P(3, 300);
  for (int i = 0; i < P.size(); ++i) P(i) = g(rng);
  const auto tris = convex_hull_3d(P);
  // Euler: a triangulated sphere has F = 2V - 4.
  std::vector<int> used(P.cols(), 0);
  for (const auto& t : tris)
    for (int v : t.v) used[v] = 1;
  int V = 0;
  for (int u : used) V += u;
  EXPECT_EQ(static_cast<int>(tris.size()), 2 * V - 4);
  for (const auto& t : tris)
    for (int i = 0; i < P.cols(); ++i) EXPECT_LE(t.normal.dot(P.col(i).head<3>()) - t.offset, 1e-9);
}

TEST(VertexEnumeration, RecoversBoxCorners) {
  Mat A(4, 2);
  A << 1, 0, -1, 0, 0, 1, 0, -1;
  Vec b(4);
  b << 2, 1, 3, 0.5;
  const Mat V = vertex_enumeration(Polytope::from_halfspaces(A, b));
  EXPECT_EQ(V.cols(), 4);
}

TEST(ApproximateMinRpi, ZeroClosedLoopGivesW) {
  const Polytope W = Polytope::inf_ball(2, 0.5);
  const Polytope E = approximate_min_rpi(Mat::Zero(2, 2), W);
  EXPECT_NEAR(support(E, v2(1, 0)), 0.5, 1e-12);
  EXPECT_NEAR(support(E, v2(1, 1)), 1.0, 1e-12);
}

TEST(ApproximateMinRpi, HalfIdentityGivesDoubledBox) {
  const Polytope W = Polytope::inf_ball(2, 1.0);
  const Mat Acl = 0.5 * Mat::Identity(2, 2);
  const Polytope E = approximate_min_rpi(Acl, W, 1e-3);
  // Geometric series: the true mRPI is box[-2,2]^2.
  EXPECT_NEAR(support(E, v2(1, 0)), 2.0, 2.0 * 0.003);
  EXPECT_GE(support(E, v2(1, 0)), 2.0 - 1e-12);
  for (int i = 0; i < E.num_vertices(); ++i)
    for (int j = 0; j < W.num_vertices(); ++j)
      EXPECT_TRUE(contains(E, Acl * E.vertices().col(i) + W.vertices().col(j), 1e-6));
}

TEST(ApproximateMinRpi, UnstableRejected) {
  EXPECT_THROW(approximate_min_rpi(1.1 * Mat::Identity(2, 2), Polytope::inf_ball(2, 1)), std::domain_error);
}

TEST(SquaredDistance, ClosedFormMatchesQp) {
  std::mt19937_64 rng(12);
  std::normal_distribution<double> g(0, 3);
  Mat P(2, 12);
  for (int i = 0; i < P.size(); ++i) P(i) = g(rng);
  const Polytope S = facet_enumeration(P);
  for (int t = 0; t < 100; ++t) {
    const Vec x = v2(g(rng) * 2, g(rng) * 2);
    EXPECT_NEAR(squared_distance(S, x), squared_distance_qp(S, x), 1e-7);
  }
  EXPECT_DOUBLE_EQ(squared_distance(Polytope::inf_ball(2, 1), v2(2, 0)), 1.0);
  Mat seg(1, 2);
  seg << -1, 3;
  const Polytope I = Polytope::from_vertices(seg);
  EXPECT_DOUBLE_EQ(squared_distance(I, Vec::Constant(1, 5.0)), 4.0);
  EXPECT_DOUBLE_EQ(squared_distance(I, Vec::Constant(1, 0.0)), 0.0);
}

TEST(Serialization, RoundTripIsBitFaithful) {
  std::mt19937_64 rng(13);
  std::normal_distribution<double> g;
  Mat P(2, 10);
  for (int i = 0; i < P.size(); ++i) P(i) = g(rng);
  const Polytope S = facet_enumeration(P);
  const Polytope R = parse_polytope(serialize(S));
  EXPECT_TRUE(R == S);
  EXPECT_EQ(serialize(R), serialize(S));
  const Polytope box = Polytope::box(v2(0.1, -0.3), v2(0.7, 1.0 / 3.0));
  EXPECT_TRUE(parse_polytope(serialize(box)) == box);
  EXPECT_TRUE(parse_polytope(serialize(Polytope::empty(2))).is_empty());
  EXPECT_THROW(parse_polytope("garbage"), std::invalid_argument);
}

}  // namespace
}  // namespace lmpc::geometry
