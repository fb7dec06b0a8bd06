#include <cmath>

#include <gtest/gtest.h>

#include "lmpc/exploration/exploration.h"
#include "lmpc/valuefn/diagnostics.h"
#include "support/example_problem.h"

namespace lmpc::exploration {
namespace {

using testing::InitializedProblem;

struct ExplorationSetup {
  InitializedProblem b;
  disturbance::DisturbanceModel dm = disturbance::build_complete(b.p.W, 40, {}, 5, 4000, 10);
  geometry::Polytope x_minus_w = geometry::pontryagin_diff(b.p.X, b.p.W);

  mpc::MpcProblemSpec spec(const Vec& x) const {
    mpc::MpcProblemSpec s;
    s.x = x;
    s.problem = &b.p;
    s.store = &b.store;
    s.disturbance = &dm;
    return s;
  }
  // Nominal closed loop from the benchmark start; a mix of active and
  // inactive terminal constraints.
  std::vector<Vec> trajectory() const {
    std::vector<Vec> xs = {testing::benchmark_start()};
    for (int k = 0; k < 12; ++k) xs.push_back(b.p.sys.nominal(xs.back(), mpc::policy(spec(xs.back()))));
    return xs;
  }
};

const ExplorationSetup& setup() {
  static const ExplorationSetup s;
  return s;
}

TEST(Distance, TrivialCases) {
  const Mat H = Mat::Random(4, 2), B = Mat::Random(2, 1);
  EXPECT_EQ(distance_value(Vec::Random(4), H, B, Vec::Zero(1)), 0.0);
  EXPECT_EQ(distance_value(Vec::Zero(4), H, B, Vec::Random(1)), 0.0);
}

TEST(Explore, ZeroOffsetWithSafeInputsIsAdmissible) {
  const ExplorationSetup& s = setup();
  const auto& st = s.b.store;
  for (const Vec& x : s.trajectory()) {
    const mpc::MpcSolution sol = mpc::solve_mpc(s.spec(x));
    ASSERT_TRUE(sol.optimal());
    const Vec base = s.b.p.sys.nominal(x, sol.u);
    EXPECT_TRUE(geometry::contains(s.x_minus_w, base, 1e-9));
    for (int i = 0; i < s.b.p.W.num_vertices(); ++i) {
      const Vec xi = base + s.b.p.W.vertices().col(i);
      const Vec ui = valuefn::safe_policy(st, xi);
      EXPECT_TRUE(geometry::contains(s.b.p.U, ui, 1e-9));
      EXPECT_TRUE(geometry::contains(st.tightened(), s.b.p.sys.nominal(xi, ui), 1e-8));
    }
  }
}

TEST(Explore, BatchesSatisfyTheirGuarantees) {
  const ExplorationSetup& s = setup();
  const auto& st = s.b.store;
  Rng rng = make_rng(41);
  int boundary = 0, sampled = 0;
  int step = 0;
  for (const Vec& x : s.trajectory()) {
    const mpc::MpcProblemSpec spec = s.spec(x);
    const mpc::MpcSolution sol = mpc::solve_mpc(spec);
    const ExplorationBatch batch = explore_step(spec, sol, s.x_minus_w, step++, rng);
    EXPECT_EQ(batch.dropped, 0);
    ASSERT_EQ(batch.size(), s.b.p.W.num_vertices());
    if (batch.mode == BatchMode::kBoundaryLp) {
      ++boundary;
      EXPECT_GE(batch.distance, -1e-9);
      EXPECT_NEAR(batch.distance,
                  distance_value(sol.nu, st.tightened().A(), s.b.p.sys.B, batch.direction), 1e-12);
      EXPECT_LE(mpc::gradient_at_optimum(sol, spec).dot(batch.direction), 1e-8);
      EXPECT_TRUE(geometry::contains(s.b.p.U, sol.u + batch.direction, 1e-9));
      for (int i = 0; i < batch.size(); ++i)
        for (int m = 0; m < s.b.p.W.num_vertices(); ++m)
          EXPECT_TRUE(geometry::contains(
              st.safe_set(),
              s.b.p.sys.step(batch.states.col(i), batch.inputs.col(i), s.b.p.W.vertices().col(m)),
              1e-7));
    } else if (batch.mode == BatchMode::kInSetSample) {
      ++sampled;
      for (int i = 0; i < batch.size(); ++i)
        EXPECT_TRUE(geometry::contains(st.safe_set(), batch.states.col(i), 1e-12));
    }
    // Every stored cost is the MPC value at that state.
    for (int i = 0; i < batch.size(); ++i) {
      const mpc::MpcSolution r = mpc::solve_mpc(s.spec(batch.states.col(i)));
      EXPECT_NEAR(r.value, batch.costs(i), 1e-9 * std::max(1.0, r.value));
    }
  }
  EXPECT_GT(boundary, 0);
  EXPECT_GT(sampled, 0);
}

TEST(Explore, BoundaryDirectionEnlargesReach) {
  // Where a tightened facet is active the LP finds a strictly positive distance.
  const ExplorationSetup& s = setup();
  Rng rng = make_rng(42);
  int active = 0;
  for (const Vec& x : s.trajectory()) {
    const mpc::MpcProblemSpec spec = s.spec(x);
    const mpc::MpcSolution sol = mpc::solve_mpc(spec);
    if (sol.nu.maxCoeff() <= 1e-7) continue;
    ++active;
    const ExplorationBatch batch = explore_step(spec, sol, s.x_minus_w, 0, rng);
    EXPECT_EQ(batch.mode, BatchMode::kBoundaryLp);
    EXPECT_GT(batch.distance, 0.0);
  }
  EXPECT_GT(active, 0);
}

TEST(Explore, SamplingFallsBackToTheStateItself) {
  const ExplorationSetup& s = setup();
  const mpc::MpcProblemSpec spec = s.spec(Vec::Zero(2));
  const mpc::MpcSolution sol = mpc::solve_mpc(spec);
  Rng rng = make_rng(43);
  ExplorationOptions opt;
  opt.max_rejections = 0;
  const ExplorationBatch batch = explore_step(spec, sol, s.x_minus_w, 0, rng, opt);
  EXPECT_EQ(batch.mode, BatchMode::kInSetSample);
  for (int i = 0; i < batch.size(); ++i) EXPECT_EQ(batch.states.col(i), Vec::Zero(2));
}

// An unusable boundary program (here a state set that excludes every
// successor) leaves the realized successors of the MPC input, which are
// always recoverable.
TEST(Explore, FailedBoundaryProgramUsesTheRealizedSuccessors) {
  const ExplorationSetup& s = setup();
  Rng rng = make_rng(44);
  int tried = 0;
  for (const Vec& x : s.trajectory()) {
    const mpc::MpcProblemSpec spec = s.spec(x);
    const mpc::MpcSolution sol = mpc::solve_mpc(spec);
    if (sol.nu.maxCoeff() <= 1e-7) continue;
    ++tried;
    const geometry::Polytope far =
        geometry::Polytope::box(Vec::Constant(2, 1000.0), Vec::Constant(2, 1001.0)).completed();
    const ExplorationBatch batch = explore_step(spec, sol, far, 0, rng);
    ASSERT_EQ(batch.mode, BatchMode::kFallback);
    EXPECT_EQ(batch.dropped, 0);
    EXPECT_EQ(batch.direction.norm(), 0.0);
    const Vec base = s.b.p.sys.nominal(x, sol.u);
    for (int i = 0; i < batch.size(); ++i) {
      EXPECT_LT((batch.states.col(i) - base - s.b.p.W.vertices().col(i)).norm(), 1e-12);
      EXPECT_TRUE(geometry::contains(s.b.store.safe_set(), batch.states.col(i), 1e-7));
      EXPECT_TRUE(mpc::solve_mpc(s.spec(batch.states.col(i))).optimal());
    }
  }
  EXPECT_GT(tried, 0);
}

}  // namespace
}  // namespace lmpc::exploration
