#include <cmath>

#include <gtest/gtest.h>

#include "lmpc/harness/stage_cost.h"
#include "lmpc/valuefn/diagnostics.h"
#include "lmpc/valuefn/learning_store.h"
#include "support/example_problem.h"

namespace lmpc::valuefn {
namespace {

using geometry::Polytope;

LearningStore square_store(const Polytope& W) {
  // Corners of [-1,1]^2 with costs 0..3 plus the centre with cost 0.5.
  Mat X(2, 5), U(1, 5);
  X << -1, 1, 1, -1, 0, -1, -1, 1, 1, 0;
  U << 1, 2, 3, 4, 5;
  Vec J(5);
  J << 0, 1, 2, 3, 0.5;
  return LearningStore::from_columns(0, X, U, J, std::vector<Provenance>(5, Provenance::kInitial),
                                     std::vector<int>(5, 0), W);
}

bool same_set(const Polytope& P, const Polytope& Q) {
  const Polytope a = P.completed(), b = Q.completed();
  for (int i = 0; i < a.num_vertices(); ++i)
    if (!geometry::contains(b, a.vertices().col(i), 1e-9)) return false;
  for (int i = 0; i < b.num_vertices(); ++i)
    if (!geometry::contains(a, b.vertices().col(i), 1e-9)) return false;
  return true;
}

using Benchmark = testing::InitializedProblem;

const Benchmark& benchmark() {
  static const Benchmark b;
  return b;
}

TEST(Evaluate, StoredColumnsAndOutside) {
  const LearningStore s = square_store(Polytope::inf_ball(2, 0.1));
  for (int i = 0; i < s.size(); ++i) {
    const ValueEvaluation ev = evaluate(s, s.X().col(i));
    ASSERT_TRUE(ev.feasible);
    EXPECT_LE(ev.value, s.J()(i) + 1e-12);
    EXPECT_LT((s.X() * ev.lambda - s.X().col(i)).norm(), 1e-8);
    EXPECT_NEAR(ev.lambda.sum(), 1.0, 1e-12);
  }
  Vec out(2);
  out << 1.5, 0;
  EXPECT_FALSE(evaluate(s, out).feasible);
  EXPECT_TRUE(std::isinf(value(s, out)));
  EXPECT_THROW(safe_policy(s, out), InfeasibilityError);
}

TEST(Evaluate, TargetVerticesHaveZeroValue) {
  const Benchmark& b = benchmark();
  for (int i = 0; i < b.data.num_target_columns; ++i)
    EXPECT_NEAR(evaluate(b.store, b.store.X().col(i)).value, 0.0, 1e-12);
}

TEST(Evaluate, SubgradientMatchesFiniteDifference) {
  const LearningStore s = square_store(Polytope::inf_ball(2, 0.1));
  Vec x(2);
  x << 0.3, -0.6;  // inside the (centre, corner 0, corner 1) triangle
  const ValueEvaluation ev = evaluate(s, x);
  const double h = 1e-6;
  for (int i = 0; i < 2; ++i) {
    Vec e = Vec::Zero(2);
    e(i) = h;
    const double fd = (evaluate(s, x + e).value - evaluate(s, x - e).value) / (2 * h);
    EXPECT_NEAR(ev.subgradient(i), fd, 1e-6);
  }
}

TEST(SafePolicy, InterpolatesInputs) {
  const LearningStore s = square_store(Polytope::inf_ball(2, 0.1));
  EXPECT_NEAR(safe_policy(s, s.X().col(4))(0), 5.0, 1e-12);
  // Midpoint of corners 0 and 1 is on the hull boundary, so the LP has to use them.
  Vec mid(2);
  mid << 0, -1;
  const ValueEvaluation ev = evaluate(s, mid);
  EXPECT_NEAR(ev.lambda(0), 0.5, 1e-12);
  EXPECT_NEAR(ev.lambda(1), 0.5, 1e-12);
  EXPECT_NEAR(safe_policy(s, mid)(0), 1.5, 1e-12);
}

TEST(SafePolicy, BenchmarkInputsStayAdmissibleAndInvariant) {
  const Benchmark& b = benchmark();
  Rng rng = make_rng(5);
  const Mat pts = sample_safe_set(b.store, 100, rng);
  for (int i = 0; i < pts.cols(); ++i)
    EXPECT_TRUE(geometry::contains(b.p.U, safe_policy(b.store, pts.col(i)), 1e-9));
  EXPECT_EQ(count_invariance_failures(b.store, b.p.sys, b.p.W, pts), 0);
}

TEST(Update, EmptyAdditionsLeaveValuesUnchanged) {
  const Benchmark& b = benchmark();
  const LearningStore next = update(b.store, EpisodeAdditions{});
  EXPECT_EQ(next.episode(), 1);
  EXPECT_EQ(next.size(), b.store.size());
  Rng rng = make_rng(6);
  const Mat pts = sample_safe_set(b.store, 50, rng);
  for (int i = 0; i < pts.cols(); ++i)
    EXPECT_EQ(value(next, pts.col(i)), value(b.store, pts.col(i)));
}

TEST(Update, DominatedColumnChangesNothing) {
  const Benchmark& b = benchmark();
  EpisodeAdditions add;
  add.append(b.store.X().col(b.data.num_target_columns + 3), Vec::Zero(1), 1e9, Provenance::kOnline);
  const LearningStore next = update(b.store, add);
  EXPECT_EQ(next.origin().back(), 1);
  Rng rng = make_rng(7);
  const Mat pts = sample_safe_set(b.store, 100, rng);
  EXPECT_LE(std::abs(max_value_increase(b.store, next, pts)), 1e-9);
}

TEST(Update, ValuesNeverIncrease) {
  const Benchmark& b = benchmark();
  Rng rng = make_rng(8);
  const Mat extra = sample_safe_set(b.store, 30, rng);
  EpisodeAdditions add;
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int i = 0; i < extra.cols(); ++i) {
    // Lower than the current value at some points, higher at others.
    const double q = value(b.store, extra.col(i));
    add.append(extra.col(i), Vec::Zero(1), q * (0.5 + u01(rng)), Provenance::kExploration);
  }
  Vec far(2);
  far << -9, -30;
  add.append(far, Vec::Zero(1), 1e4, Provenance::kExploration);
  const LearningStore next = update(b.store, add);
  const Mat pts = sample_safe_set(b.store, 100, rng);
  EXPECT_LE(max_value_increase(b.store, next, pts), 1e-6);
  EXPECT_TRUE(geometry::contains(next.safe_set(), far, 1e-9));
  for (int i = 0; i < b.store.safe_set().num_vertices(); ++i)
    EXPECT_TRUE(geometry::contains(next.safe_set(), b.store.safe_set().vertices().col(i), 1e-9));
}

TEST(Update, DegenerateStoreKeepsPreviousFacets) {
  Mat X(2, 2), U = Mat::Zero(1, 2);
  X << 0, 1, 0, 1;
  const LearningStore line = LearningStore::from_columns(
      0, X, U, Vec::Zero(2), {Provenance::kInitial, Provenance::kInitial}, {0, 0},
      Polytope::inf_ball(2, 0.1));
  EXPECT_TRUE(line.degenerate());
  EXPECT_EQ(line.lower_hull(), nullptr);
  EXPECT_THROW(tightened_terminal(line, Polytope::inf_ball(2, 0.1)), ConfigError);
}

TEST(TightenedTerminal, BoxExamples) {
  const Polytope W = Polytope::inf_ball(2, 0.25);
  const LearningStore s = square_store(W);
  const Polytope t = tightened_terminal(s, W);
  EXPECT_TRUE(same_set(t, Polytope::inf_ball(2, 0.75)));
  const Mat& V = t.vertices();
  for (int i = 0; i < V.cols(); ++i)
    for (int m = 0; m < W.num_vertices(); ++m)
      EXPECT_TRUE(geometry::contains(s.safe_set(), V.col(i) + W.vertices().col(m), 1e-12));
  const Polytope same = tightened_terminal(s, Polytope::from_vertices(Mat::Zero(2, 1)));
  EXPECT_TRUE(same_set(same, Polytope::inf_ball(2, 1.0)));
}

TEST(TightenedTerminal, BenchmarkSuccessorsStayInside) {
  const Benchmark& b = benchmark();
  const Polytope& t = b.store.tightened();
  ASSERT_FALSE(t.is_empty());
  for (int i = 0; i < t.num_vertices(); ++i)
    for (int m = 0; m < b.p.W.num_vertices(); ++m)
      EXPECT_TRUE(geometry::contains(b.store.safe_set(), t.vertices().col(i) + b.p.W.vertices().col(m), 1e-9));
}

TEST(Properties, ConvexityAndLipschitz) {
  const Benchmark& b = benchmark();
  Rng rng = make_rng(9);
  const Mat pts = sample_safe_set(b.store, 60, rng);
  EXPECT_LE(max_convexity_violation(b.store, pts, 200, rng), 1e-6);
  const double L = lipschitz_estimate(b.store, pts);
  EXPECT_TRUE(std::isfinite(L));
  EXPECT_GT(L, 0.0);
}

TEST(Properties, InitialStoreSatisfiesCostCondition) {
  const Benchmark& b = benchmark();
  const auto dm = disturbance::build_complete(b.p.W, 30, {}, 21, 600, 10);
  const auto rep = check_cost_condition(b.store, dm, b.p.sys, b.cost);
  EXPECT_TRUE(rep.ok()) << rep.summary();
}

// Closed-form lower hull against the LP on several kinds of clouds.
void expect_hull_matches_lp(const Mat& X, const Vec& J, const Mat& queries) {
  const PlanarLowerHull hull(X, J);
  for (int i = 0; i < queries.cols(); ++i) {
    const Vec y = queries.col(i);
    const double lp = testing::hull_value_lp(X, J, y);
    const double fast = hull.value(Eigen::Vector2d(y(0), y(1)));
    if (std::isinf(lp)) {
      // Points outside only by rounding may still be located.
      if (!geometry::contains(Polytope::from_vertices(X), y, 1e-6))
        EXPECT_TRUE(std::isinf(fast)) << "query " << i;
      continue;
    }
    ASSERT_TRUE(std::isfinite(fast)) << "query " << i << " at " << y.transpose();
    EXPECT_NEAR(fast, lp, 1e-9 * std::max(1.0, std::abs(lp))) << "query " << i;
    const Vec lam = hull.coefficients(Eigen::Vector2d(y(0), y(1)));
    EXPECT_LT((X * lam - y).norm(), 1e-8);
    EXPECT_NEAR(J.dot(lam), lp, 1e-9 * std::max(1.0, std::abs(lp)));
  }
}

Mat random_points(int n, double lo, double hi, Rng& rng) {
  std::uniform_real_distribution<double> u(lo, hi);
  Mat P(2, n);
  for (int i = 0; i < n; ++i) P.col(i) << u(rng), u(rng);
  return P;
}

TEST(LowerHull, MatchesLpOnRandomClouds) {
  Rng rng = make_rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat X = random_points(5 + 10 * trial, -3, 3, rng);
    Vec J(X.cols());
    std::uniform_real_distribution<double> u(0, 10);
    for (int i = 0; i < J.size(); ++i) J(i) = u(rng);
    Mat Q(2, 60 + X.cols());
    Q << random_points(60, -3.5, 3.5, rng), X;
    expect_hull_matches_lp(X, J, Q);
  }
}

TEST(LowerHull, FlatAndGridClouds) {
  Rng rng = make_rng(11);
  // Many equal values: the lifted cloud is mostly coplanar.
  Mat X = random_points(40, -1, 1, rng);
  Vec J = Vec::Zero(40);
  J.head(5).setConstant(2.0);
  expect_hull_matches_lp(X, J, random_points(200, -1, 1, rng));
  // Regular grid with a convex quadratic; many collinear points.
  Mat G(2, 121);
  Vec JG(121);
  for (int i = 0; i < 11; ++i)
    for (int j = 0; j < 11; ++j) {
      G.col(i * 11 + j) << i - 5.0, j - 5.0;
      JG(i * 11 + j) = (i - 5.0) * (i - 5.0) + 0.5 * (j - 5.0) * (j - 5.0);
    }
  Mat Q(2, 321);
  Q << random_points(200, -5, 5, rng), G;
  expect_hull_matches_lp(G, JG, Q);
  // Grid with a nonconvex profile, so the hull really interpolates.
  for (int i = 0; i < JG.size(); ++i) JG(i) = std::abs(std::sin(G(0, i) + 0.3 * G(1, i))) * 10;
  expect_hull_matches_lp(G, JG, Q);
}

TEST(LowerHull, MatchesLpOnBenchmarkStore) {
  const Benchmark& b = benchmark();
  Rng rng = make_rng(12);
  Mat Q(2, 300 + b.store.size());
  Q << sample_safe_set(b.store, 300, rng), b.store.X();
  expect_hull_matches_lp(b.store.X(), b.store.J(), Q);
}

TEST(LowerHull, DirectionalSlopesBracketFiniteDifferences) {
  Rng rng = make_rng(13);
  const Mat X = random_points(30, -2, 2, rng);
  Vec J(30);
  for (int i = 0; i < 30; ++i) J(i) = X.col(i).squaredNorm() + 0.1 * i;
  const PlanarLowerHull hull(X, J);
  const Eigen::Vector2d d(0.5, 1.0);
  const Mat Q = random_points(100, -0.5, 0.5, rng);
  for (int i = 0; i < Q.cols(); ++i) {
    const Eigen::Vector2d y(Q(0, i), Q(1, i));
    const auto q = hull.query(y, d);
    ASSERT_TRUE(q.inside);
    const double h = 1e-7;
    EXPECT_NEAR((hull.value(y + h * d) - q.value) / h, q.slope_right, 1e-5);
    EXPECT_NEAR((q.value - hull.value(y - h * d)) / h, q.slope_left, 1e-5);
  }
}

TEST(ColumnFile, RoundTripIsExact) {
  const Benchmark& b = benchmark();
  EpisodeAdditions add;
  Vec x(2);
  x << 1.0 / 3, -2.0 / 7;
  add.append(x, Vec::Constant(1, 0.1), 12.345678901234567, Provenance::kOnline);
  const LearningStore s = update(b.store, add);
  const LearningStore back = load_columns(save_columns(s), b.p.W);
  EXPECT_EQ(back.episode(), s.episode());
  EXPECT_TRUE(back.X() == s.X());
  EXPECT_TRUE(back.U() == s.U());
  EXPECT_TRUE(back.J() == s.J());
  EXPECT_EQ(back.provenance(), s.provenance());
  EXPECT_EQ(back.origin(), s.origin());
  EXPECT_THROW(load_columns("garbage\n", b.p.W), ConfigError);
}

}  // namespace
}  // namespace lmpc::valuefn
