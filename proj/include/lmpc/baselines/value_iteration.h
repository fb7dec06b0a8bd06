#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "lmpc/common.h"
#include "lmpc/disturbance/disturbance_model.h"
#include "lmpc/mpc/one_step_mpc.h"
#include "lmpc/random.h"
#include "lmpc/system.h"
#include "lmpc/valuefn/learning_store.h"

namespace lmpc::baselines {

/// Values on a regular lattice clipped to the state constraints. Points
/// without a feasible input hold +inf.
struct GridValueFunction {
  Mat points;   // nx x n
  Vec values;   // n
  Mat inputs;   // nu x n, minimizer of the last sweep (zero where infeasible)
  double spacing = 1.0;
  int iterations = 0;
  std::vector<double> history;  // sup-norm change per sweep
  bool converged = false;

  int size() const { return static_cast<int>(values.size()); }
  bool feasible(int i) const { return std::isfinite(values(i)); }
  int num_feasible() const;
};

struct ValueIterationOptions {
  double spacing = 1.0;
  double tol = 1e-2;
  int max_iter = 20;
  mpc::MpcOptions mpc;
};

/// Lattice points of spacing h over the bounding box of X, anchored at the
/// lower corner, keeping those inside X.
Mat lattice(const geometry::Polytope& X, double h);

/// Store whose columns are the finite grid points, used as the interpolated
/// value inside one Bellman sweep. Throws ConfigError when the finite points
/// do not span the state space.
valuefn::LearningStore grid_store(const GridValueFunction& v, const geometry::Polytope& W);

/// One sweep: v+(x) = min_u l(x,u) + sum_m p_m Qv(A x + B u + w_m), where Qv
/// interpolates the finite grid values over their convex hull.
GridValueFunction bellman_sweep(const GridValueFunction& v, const ControlProblem& problem,
                                const disturbance::DisturbanceModel& dm,
                                const mpc::MpcOptions& options = {});

/// Sweeps from zero until the sup-norm change drops below tol or max_iter
/// sweeps are done. Throws ConfigError if no grid point is feasible.
GridValueFunction value_iteration(const ControlProblem& problem,
                                  const disturbance::DisturbanceModel& dm,
                                  const ValueIterationOptions& options = {});

/// Same, on an explicit point set (any order).
GridValueFunction value_iteration(const Mat& points, const ControlProblem& problem,
                                  const disturbance::DisturbanceModel& dm,
                                  const ValueIterationOptions& options = {});

/// Interpolated value at an arbitrary point; +inf outside the feasible hull.
double interpolate(const GridValueFunction& v, const geometry::Polytope& W, const Vec& x);

/// Table with header "x1,...,value,feasible", one row per grid point.
std::string export_table(const GridValueFunction& v);
void export_table_file(const GridValueFunction& v, const std::string& path);
/// Points and values back from a table; inputs are zero and the history is
/// empty. Throws ConfigError on malformed input.
GridValueFunction import_table(const std::string& text);
GridValueFunction import_table_file(const std::string& path);

struct FixedPointReport {
  int checked = 0;
  int violations = 0;
  double worst_excess = 0.0;  // max of Q(x) - (T Q)(x)
};

/// Compares the store value with one Bellman application of it at random
/// points of the safe set. Violations are Q(x) > (T Q)(x) + tol.
FixedPointReport fixed_point_check(const valuefn::LearningStore& store,
                                   const ControlProblem& problem,
                                   const disturbance::DisturbanceModel& dm, int count, Rng& rng,
                                   double tol = 1e-4);

using mpc::certainty_equivalent_mode;

}  // namespace lmpc::baselines
