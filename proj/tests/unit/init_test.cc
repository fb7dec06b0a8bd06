#include <cmath>

#include <gtest/gtest.h>

#include "lmpc/harness/stage_cost.h"
#include "lmpc/init/initialization.h"
#include "support/example_problem.h"

namespace lmpc::init {
namespace {

using geometry::Polytope;

TEST(Lqr, ZeroDynamicsGiveZeroGain) {
  const Mat K = lqr_gain(Mat::Zero(2, 2), Mat::Ones(2, 1), Mat::Identity(2, 2), Mat::Identity(1, 1));
  EXPECT_LT(K.cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Lqr, CheapControlIsDeadbeat) {
  const Mat one = Mat::Identity(1, 1);
  const Mat K = lqr_gain(one, one, one, 1e-8 * one);
  EXPECT_NEAR(K(0, 0), -1.0, 1e-6);
}

TEST(Lqr, ScalarMatchesClosedForm) {
  // p = q + a^2 p - a^2 b^2 p^2 / (r + b^2 p), solved as a quadratic in p.
  const double a = 1.2, b = 0.7, q = 2.0, r = 0.5;
  const double c2 = b * b, c1 = r - a * a * r - q * b * b, c0 = -q * r;
  const double p = (-c1 + std::sqrt(c1 * c1 - 4 * c2 * c0)) / (2 * c2);
  const double k = -a * b * p / (r + b * b * p);
  const Mat K = lqr_gain(Mat::Constant(1, 1, a), Mat::Constant(1, 1, b), Mat::Constant(1, 1, q),
                         Mat::Constant(1, 1, r));
  EXPECT_NEAR(K(0, 0), k, 1e-9);
}

TEST(Lqr, BenchmarkGainSolvesRiccati) {
  const LinearSystem sys = testing::double_integrator();
  const Mat Q = Mat::Identity(2, 2), R = 0.01 * Mat::Identity(1, 1);
  const Mat P = riccati_solution(sys.A, sys.B, Q, R);
  EXPECT_LT(riccati_residual(sys.A, sys.B, Q, R, P), 1e-10);
  const Mat K = lqr_gain(sys.A, sys.B, Q, R);
  EXPECT_LT(spectral_radius(sys.A + sys.B * K), 1.0);
  // P is the cost matrix of a stabilizing gain, so positive definite.
  Eigen::SelfAdjointEigenSolver<Mat> es(P);
  EXPECT_GT(es.eigenvalues().minCoeff(), 0.0);
}

TEST(Lqr, UnstabilizableDoesNotConverge) {
  const Mat A = 2 * Mat::Identity(1, 1), B = Mat::Zero(1, 1), one = Mat::Identity(1, 1);
  EXPECT_THROW(lqr_gain(A, B, one, one, 1e-10, 500), SolverError);
}

TEST(TargetSet, ZeroDisturbanceGivesOrigin) {
  const ControlProblem p = testing::benchmark_problem();
  const Polytope O = build_target_set(p.sys, p.K, Polytope::from_vertices(Mat::Zero(2, 1)), p.X, p.U);
  EXPECT_LT(O.vertices().cwiseAbs().maxCoeff(), 1e-12);
}

TEST(TargetSet, BenchmarkIsRobustlyInvariantAtVertices) {
  const ControlProblem p = testing::benchmark_problem();
  const Mat Acl = p.sys.A + p.sys.B * p.K;
  const Mat& VO = p.O.vertices();
  const Mat& VW = p.W.vertices();
  for (int i = 0; i < VO.cols(); ++i) {
    for (int j = 0; j < VW.cols(); ++j)
      EXPECT_TRUE(geometry::contains(p.O, Acl * VO.col(i) + VW.col(j), 1e-9));
    EXPECT_TRUE(geometry::contains(p.U, p.K * VO.col(i)));
    EXPECT_TRUE(geometry::contains(p.KO, p.K * VO.col(i), 1e-9));
  }
}

TEST(TargetSet, RejectsSetsThatDoNotFit) {
  const ControlProblem p = testing::benchmark_problem();
  const Polytope tiny_x = Polytope::inf_ball(2, 0.1);
  EXPECT_THROW(build_target_set(p.sys, p.K, p.W, tiny_x, p.U), ConfigError);
  const Polytope tiny_u = Polytope::inf_ball(1, 0.01);
  EXPECT_THROW(build_target_set(p.sys, p.K, p.W, p.X, tiny_u), ConfigError);
}

TEST(TubePlan, StartInsideTargetNeedsOneStep) {
  const ControlProblem p = testing::benchmark_problem();
  const TubePlan plan = plan_tube(Vec::Zero(2), p.sys, p.K, p.O, p.X, p.U, p.O);
  EXPECT_EQ(plan.horizon, 1);
  const PlanResiduals r = plan_residuals(plan, p.sys, p.X, p.U, p.O);
  EXPECT_LT(r.terminal, 1e-8);
}

TEST(TubePlan, BenchmarkStartIsFeasibleAndMinimal) {
  const ControlProblem p = testing::benchmark_problem();
  const TubePlan plan = plan_tube(testing::benchmark_start(), p.sys, p.K, p.O, p.X, p.U, p.O);
  ASSERT_GT(plan.horizon, 1);
  const PlanResiduals r = plan_residuals(plan, p.sys, p.X, p.U, p.O);
  EXPECT_EQ(r.dynamics, 0.0);
  EXPECT_LT(r.state, 1e-8);
  EXPECT_LT(r.input, 1e-8);
  EXPECT_LT(r.terminal, 1e-8);
  EXPECT_THROW(plan_tube(testing::benchmark_start(), p.sys, p.K, p.O, p.X, p.U, p.O, plan.horizon - 1),
               InfeasibilityError);
}

TEST(TubePlan, StartOutsideStateSetIsRejected) {
  const ControlProblem p = testing::benchmark_problem();
  Vec x(2);
  x << 50, 0;
  EXPECT_THROW(plan_tube(x, p.sys, p.K, p.O, p.X, p.U, p.O), ConfigError);
}

struct Initialized {
  ControlProblem p = testing::benchmark_problem();
  TubePlan plan;
  InitialData data;
  StageCost cost;
  Initialized() {
    plan = plan_tube(testing::benchmark_start(), p.sys, p.K, p.O, p.X, p.U, p.O);
    cost = [this](const Vec& x, const Vec& u) { return harness::stage_cost(x, u, p.O, p.KO); };
    data = build_initial_data(plan, p.O, cost);
  }
};

TEST(InitialData, LayoutAndCosts) {
  const Initialized in;
  const int lo = in.p.O.num_vertices(), le = in.plan.E.num_vertices();
  ASSERT_EQ(in.data.size(), lo + le * (in.plan.horizon + 2));
  EXPECT_EQ(in.data.num_target_columns, lo);
  EXPECT_EQ(in.data.X.cols(), in.data.U.cols());
  for (int i = 0; i < lo; ++i) {
    EXPECT_EQ(in.data.J(i), 0.0);
    EXPECT_EQ(in.data.tube[i], -1);
  }
  // Non-increasing along the tube index and zero on the last tube.
  for (int i = lo + 1; i < in.data.size(); ++i)
    if (in.data.tube[i] > in.data.tube[i - 1]) EXPECT_GE(in.data.J(i - 1), in.data.J(i));
  EXPECT_EQ(in.data.J(in.data.size() - 1), 0.0);
  EXPECT_GT(in.data.J(lo), 0.0);
  for (int i = 0; i < in.data.size(); ++i)
    EXPECT_TRUE(geometry::contains(in.p.U, in.data.U.col(i), 1e-9));
}

TEST(InitialData, SuccessorsLandInTubesOrTarget) {
  const Initialized in;
  const Mat& VW = in.p.W.vertices();
  for (int i = 0; i < in.data.size(); ++i) {
    const int k = in.data.tube[i];
    for (int m = 0; m < VW.cols(); ++m) {
      const Vec next = in.p.sys.step(in.data.X.col(i), in.data.U.col(i), VW.col(m));
      const Polytope& target =
          (k < 0 || k > in.plan.horizon) ? in.p.O : in.plan.E.translated(in.plan.states.col(k + 1));
      EXPECT_TRUE(geometry::contains(target, next, 1e-8)) << i << " " << m;
    }
  }
}

TEST(InitialData, AllInsideTargetGivesZeroCost) {
  const ControlProblem p = testing::benchmark_problem();
  const TubePlan plan = plan_tube(Vec::Zero(2), p.sys, p.K, p.O, p.X, p.U, p.O);
  const InitialData data = build_initial_data(
      plan, p.O, [&](const Vec& x, const Vec& u) { return harness::stage_cost(x, u, p.O, p.KO); });
  EXPECT_LT(data.J.cwiseAbs().maxCoeff(), 1e-12);
}

TEST(InitialCondition, HoldsOnBenchmarkAndCatchesMutation) {
  const Initialized in;
  const disturbance::DisturbanceModel dm =
      disturbance::build_complete(in.p.W, 20, {}, 3, 400, 10);
  auto value = [&](const InitialData& d) {
    return [&d](const Vec& x) { return testing::hull_value_lp(d.X, d.J, x); };
  };
  const InitialConditionReport rep =
      validate_initial_condition(in.data, value(in.data), dm, in.p.sys, in.cost);
  EXPECT_TRUE(rep.ok()) << rep.summary();
  for (int i = 0; i < in.data.num_target_columns; ++i) EXPECT_NEAR(rep.margins(i), 0.0, 1e-9);

  // Lowering the cost of the first tube by 10% breaks the condition there.
  InitialData bad = in.data;
  const int lo = bad.num_target_columns, le = in.plan.E.num_vertices();
  bad.J.segment(lo, le) *= 0.9;
  const InitialConditionReport broken =
      validate_initial_condition(bad, value(bad), dm, in.p.sys, in.cost);
  EXPECT_FALSE(broken.ok());
}

}  // namespace
}  // namespace lmpc::init
