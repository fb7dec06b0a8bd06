#include <chrono>
#include <cmath>

#include <gtest/gtest.h>

#include "lmpc/harness/stage_cost.h"
#include "lmpc/mpc/one_step_mpc.h"
#include "lmpc/valuefn/diagnostics.h"
#include "support/example_problem.h"

namespace lmpc::mpc {
namespace {

using testing::InitializedProblem;

const InitializedProblem& bench() {
  static const InitializedProblem b;
  return b;
}

const disturbance::DisturbanceModel& bench_model() {
  static const disturbance::DisturbanceModel dm =
      disturbance::build_complete(bench().p.W, 100, {}, 7, 10000, 10);
  return dm;
}

// Smaller instance for the assembled QP: start close to the target.
const InitializedProblem& small() {
  static const InitializedProblem s([] {
    Vec x(2);
    x << 4, 1;
    return x;
  }());
  return s;
}

const disturbance::DisturbanceModel& small_model() {
  static const disturbance::DisturbanceModel dm =
      disturbance::build_complete(small().p.W, 8, {}, 3, 2000, 10);
  return dm;
}

MpcProblemSpec spec_for(const InitializedProblem& b, const disturbance::DisturbanceModel& dm,
                        const Vec& x) {
  MpcProblemSpec s;
  s.x = x;
  s.problem = &b.p;
  s.store = &b.store;
  s.disturbance = &dm;
  return s;
}

TEST(Mpc, ZeroValueInsideTarget) {
  const auto& b = bench();
  for (int i = 0; i < b.p.O.num_vertices(); i += 3) {
    const MpcSolution sol = solve_mpc(spec_for(b, bench_model(), b.p.O.vertices().col(i)));
    ASSERT_TRUE(sol.optimal());
    EXPECT_NEAR(sol.value, 0.0, 1e-9);
  }
}

TEST(Mpc, StoredColumnsBoundTheValue) {
  const auto& b = bench();
  for (int i = 0; i < b.store.size(); i += 7) {
    const MpcSolution sol = solve_mpc(spec_for(b, bench_model(), b.store.X().col(i)));
    ASSERT_TRUE(sol.optimal()) << i;
    EXPECT_LE(sol.value, b.store.J()(i) + 1e-6) << i;
    EXPECT_GE(sol.value, 0.0);
  }
}

TEST(Mpc, StartValueBelowInitialCostToGo) {
  const auto& b = bench();
  const Vec xs = testing::benchmark_start();
  const MpcSolution sol = solve_mpc(spec_for(b, bench_model(), xs));
  ASSERT_TRUE(sol.optimal());
  EXPECT_TRUE(std::isfinite(sol.value));
  EXPECT_LE(sol.value, valuefn::evaluate(b.store, xs).value + 1e-6);
}

TEST(Mpc, ConstraintsAndRobustSuccessors) {
  const auto& b = bench();
  Rng rng = make_rng(31);
  const Mat pts = valuefn::sample_safe_set(b.store, 60, rng);
  int solved = 0;
  for (int i = 0; i < pts.cols(); ++i) {
    const MpcSolution sol = solve_mpc(spec_for(b, bench_model(), pts.col(i)));
    if (!sol.optimal()) continue;
    ++solved;
    const Vec next = b.p.sys.nominal(pts.col(i), sol.u);
    EXPECT_TRUE(geometry::contains(b.p.U, sol.u, 1e-9));
    EXPECT_LE((b.store.tightened().A() * next - b.store.tightened().b()).maxCoeff(), 1e-6);
    for (int m = 0; m < b.p.W.num_vertices(); ++m)
      EXPECT_TRUE(geometry::contains(b.store.safe_set(), next + b.p.W.vertices().col(m), 1e-7));
    EXPECT_GE(sol.nu.minCoeff(), -1e-8);
    EXPECT_GE(sol.gamma.minCoeff(), -1e-8);
  }
  // Every state of the safe set can use the safe policy, so all solves succeed.
  EXPECT_EQ(solved, pts.cols());
}

TEST(Mpc, InfeasibleStateIsReported) {
  const auto& b = bench();
  Vec x(2);
  x << 39, 9;
  const MpcSolution sol = solve_mpc(spec_for(b, bench_model(), x));
  EXPECT_EQ(sol.status, solver::SolveStatus::kInfeasible);
  EXPECT_THROW(policy(spec_for(b, bench_model(), x)), InfeasibilityError);
}

TEST(Mpc, NoWorseThanSafePolicy) {
  const auto& b = bench();
  const auto& dm = bench_model();
  Rng rng = make_rng(32);
  const Mat pts = valuefn::sample_safe_set(b.store, 50, rng);
  for (int i = 0; i < pts.cols(); ++i) {
    const MpcProblemSpec s = spec_for(b, dm, pts.col(i));
    const MpcSolution sol = solve_mpc(s);
    ASSERT_TRUE(sol.optimal());
    const Vec u = valuefn::safe_policy(b.store, pts.col(i));
    double bound = b.cost(pts.col(i), u);
    for (int m = 0; m < dm.size(); ++m)
      bound += dm.weights(m) * valuefn::value(b.store, b.p.sys.nominal(pts.col(i), u) + dm.samples.col(m));
    EXPECT_LE(sol.value, bound + 1e-6);
  }
}

TEST(Mpc, OptimumBeatsInputScan) {
  const auto& b = bench();
  Rng rng = make_rng(33);
  const Mat pts = valuefn::sample_safe_set(b.store, 20, rng);
  for (int i = 0; i < pts.cols(); ++i) {
    const MpcProblemSpec s = spec_for(b, bench_model(), pts.col(i));
    const MpcSolution sol = solve_mpc(s);
    ASSERT_TRUE(sol.optimal());
    EXPECT_NEAR(objective_at(s, sol.u, 1e-7), sol.value, 1e-9 * std::max(1.0, sol.value));
    for (double u = -5; u <= 5; u += 0.01)
      EXPECT_GE(objective_at(s, Vec::Constant(1, u)), sol.value - 1e-9 * std::max(1.0, sol.value));
  }
}

TEST(Mpc, FastRouteMatchesAssembledQp) {
  const auto& b = small();
  const auto& dm = small_model();
  Rng rng = make_rng(34);
  const Mat pts = valuefn::sample_safe_set(b.store, 8, rng);
  MpcOptions fast, full;
  fast.route = Route::kFast;
  full.route = Route::kAssembled;
  for (int i = 0; i < pts.cols(); ++i) {
    for (TerminalMode mode : {TerminalMode::kExpected, TerminalMode::kCertaintyEquivalent}) {
      MpcProblemSpec s = spec_for(b, dm, pts.col(i));
      s.mode = mode;
      const MpcSolution a = solve_mpc(s, fast), q = solve_mpc(s, full);
      ASSERT_TRUE(a.optimal());
      ASSERT_TRUE(q.optimal());
      EXPECT_EQ(a.route, "fast");
      EXPECT_EQ(q.route, "assembled");
      EXPECT_NEAR(a.value, q.value, 1e-6 * std::max(1.0, q.value));
    }
  }
}

TEST(Mpc, GradientMatchesOneSidedDifference) {
  const auto& b = bench();
  Rng rng = make_rng(35);
  const Mat pts = valuefn::sample_safe_set(b.store, 80, rng);
  int checked = 0;
  for (int i = 0; i < pts.cols(); ++i) {
    const MpcProblemSpec s = spec_for(b, bench_model(), pts.col(i));
    const MpcSolution sol = solve_mpc(s);
    ASSERT_TRUE(sol.optimal());
    const Vec g = gradient_at_optimum(sol, s);
    const double u = sol.u(0), h = 1e-6;
    if (g.norm() == 0.0) continue;  // interior optimum
    // The active side is where the gradient points against the constraint.
    const double dir = g(0) < 0 ? -1.0 : 1.0;
    const double f0 = objective_at(s, sol.u, 1e-7);
    const double f1 = objective_at(s, Vec::Constant(1, u + dir * h), 1e-7);
    const double f2 = objective_at(s, Vec::Constant(1, u + 2 * dir * h), 1e-7);
    if (!std::isfinite(f1) || !std::isfinite(f2)) continue;
    const double d1 = (f1 - f0) / h, d2 = (f2 - f1) / h;
    if (std::abs(d1 - d2) > 1e-3 * std::max(1.0, std::abs(d1))) continue;  // kink nearby
    EXPECT_NEAR(dir * d1, g(0), 1e-3 * std::max(1.0, std::abs(g(0))));
    ++checked;
  }
  EXPECT_GT(checked, 0);
}

TEST(Mpc, InteriorOptimumHasZeroGradient) {
  const auto& b = bench();
  const MpcProblemSpec s = spec_for(b, bench_model(), Vec::Zero(2));
  const MpcSolution sol = solve_mpc(s);
  ASSERT_TRUE(sol.optimal());
  EXPECT_EQ(sol.nu.cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ(gradient_at_optimum(sol, s).norm(), 0.0);
}

TEST(Mpc, ExpectedSuccessorCostBoundsTheMean) {
  const auto& b = bench();
  const auto& dm = bench_model();
  Rng rng = make_rng(36);
  const geometry::Polytope& T = b.store.tightened();
  // Nominal successors well inside the tightened set.
  const Mat cand = valuefn::sample_safe_set(b.store, 400, rng);
  int used = 0;
  for (int i = 0; i < cand.cols() && used < 50; ++i) {
    const Vec y = cand.col(i);
    if ((T.A() * y - T.b()).maxCoeff() > -0.1) continue;
    ++used;
    double discrete = 0;
    for (int m = 0; m < dm.size(); ++m)
      discrete += dm.weights(m) * valuefn::value(b.store, y + dm.samples.col(m));
    const int N = 2000;
    double mean = 0, sq = 0;
    for (int n = 0; n < N; ++n) {
      const double q = valuefn::value(b.store, y + dm.distribution.sample(dm.W, rng));
      mean += q / N;
      sq += q * q / N;
    }
    const double se = std::sqrt(std::max(sq - mean * mean, 0.0) / N);
    EXPECT_GE(discrete, mean - 3 * se - 1e-9) << y.transpose();
  }
  EXPECT_EQ(used, 50);
}

TEST(Mpc, ModesAgreeWithoutDisturbance) {
  const auto& b = bench();
  disturbance::DisturbanceModel dm;
  dm.W = geometry::Polytope::from_vertices(Mat::Zero(2, 1)).completed();
  dm.samples = Mat::Zero(2, 1);
  dm.weights = Vec::Ones(1);
  Rng rng = make_rng(37);
  const Mat pts = valuefn::sample_safe_set(b.store, 20, rng);
  for (int i = 0; i < pts.cols(); ++i) {
    const MpcProblemSpec s = spec_for(b, dm, pts.col(i));
    const MpcSolution e = solve_mpc(s), c = solve_mpc(certainty_equivalent_mode(s));
    ASSERT_EQ(e.optimal(), c.optimal());
    if (e.optimal()) EXPECT_NEAR(e.value, c.value, 1e-12 * std::max(1.0, e.value));
  }
}

TEST(Mpc, ModesShareFeasibility) {
  const auto& b = bench();
  Rng rng = make_rng(38);
  const Mat pts = valuefn::sample_safe_set(b.store, 30, rng);
  for (int i = 0; i < pts.cols(); ++i) {
    const MpcProblemSpec s = spec_for(b, bench_model(), pts.col(i));
    EXPECT_EQ(solve_mpc(s).optimal(), solve_mpc(certainty_equivalent_mode(s)).optimal());
  }
}

}  // namespace
}  // namespace lmpc::mpc
