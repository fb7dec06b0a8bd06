#pragma once

// Double-integrator benchmark used throughout the tests.

#include "lmpc/common.h"
#include "lmpc/geometry/polytope.h"
#include "lmpc/harness/stage_cost.h"
#include "lmpc/init/initialization.h"
#include "lmpc/solver/convex_program.h"
#include "lmpc/system.h"
#include "lmpc/valuefn/learning_store.h"

namespace lmpc::testing {

inline LinearSystem double_integrator() {
  LinearSystem sys;
  sys.A.resize(2, 2);
  sys.A << 1, 1, 0, 1;
  sys.B.resize(2, 1);
  sys.B << 0.5, 1;
  return sys;
}

inline ControlProblem benchmark_problem() {
  ControlProblem p;
  p.sys = double_integrator();
  Vec xlo(2), xhi(2);
  xlo << -10, -40;
  xhi << 40, 10;
  p.X = geometry::Polytope::box(xlo, xhi);
  p.U = geometry::Polytope::box(Vec::Constant(1, -5), Vec::Constant(1, 5));
  p.W = geometry::Polytope::inf_ball(2, 1.0 / 3).completed();
  p.K = init::lqr_gain(p.sys.A, p.sys.B, Mat::Identity(2, 2), 0.01 * Mat::Identity(1, 1));
  p.O = init::build_target_set(p.sys, p.K, p.W, p.X, p.U);
  p.KO = init::input_image(p.K, p.O);
  return p;
}

inline Vec benchmark_start() {
  Vec x(2);
  x << 30, 5;
  return x;
}

/// Convex-hull interpolation of (X, J) by LP: min J.lambda, X lambda = x,
/// sum lambda = 1, lambda >= 0. +inf outside conv(X).
inline double hull_value_lp(const Mat& X, const Vec& J, const Vec& x) {
  const int l = static_cast<int>(J.size());
  solver::ConvexProgram lp(l);
  lp.set_linear(J);
  lp.set_bounds(Vec::Zero(l), Vec::Constant(l, std::numeric_limits<double>::infinity()));
  Mat Aeq(X.rows() + 1, l);
  Aeq.topRows(X.rows()) = X;
  Aeq.bottomRows(1).setOnes();
  Vec beq(X.rows() + 1);
  beq << x, 1.0;
  lp.add_equality("hull", Aeq, beq);
  const auto r = solver::solve(lp);
  if (!r.optimal()) return std::numeric_limits<double>::infinity();
  return r.objective;
}

/// Benchmark problem with its tube initialization and version-0 store.
struct InitializedProblem {
  ControlProblem p = benchmark_problem();
  init::TubePlan plan;
  init::InitialData data;
  valuefn::LearningStore store;
  init::StageCost cost;

  explicit InitializedProblem(const Vec& start = benchmark_start()) {
    plan = init::plan_tube(start, p.sys, p.K, p.O, p.X, p.U, p.O);
    cost = [this](const Vec& x, const Vec& u) { return harness::stage_cost(x, u, p.O, p.KO); };
    data = init::build_initial_data(plan, p.O, cost);
    store = valuefn::LearningStore::from_initial(data, p.W);
  }
  InitializedProblem(const InitializedProblem&) = delete;
};

}  // namespace lmpc::testing
