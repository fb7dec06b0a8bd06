#pragma once

#include <vector>

#include "lmpc/disturbance/disturbance_model.h"
#include "lmpc/init/initialization.h"
#include "lmpc/random.h"
#include "lmpc/system.h"
#include "lmpc/valuefn/learning_store.h"

namespace lmpc::valuefn {

/// Points drawn uniformly from the safe set (rejection from its bounding box).
Mat sample_safe_set(const LearningStore& store, int count, Rng& rng);

/// J_i >= l(X_i, U_i) + sum_m p_m Q(A X_i + B U_i + w_m) - tol for every column.
init::InitialConditionReport check_cost_condition(const LearningStore& store,
                                                  const disturbance::DisturbanceModel& dm,
                                                  const LinearSystem& sys,
                                                  const init::StageCost& stage_cost,
                                                  double tol = 1e-6);

/// Largest Q_new(x) - Q_old(x) over the given points (<= 0 when the value
/// function did not increase).
double max_value_increase(const LearningStore& older, const LearningStore& newer,
                          const Mat& points);

/// Largest violation of Q(t x + (1-t) y) <= t Q(x) + (1-t) Q(y) over random
/// pairs of the given points.
double max_convexity_violation(const LearningStore& store, const Mat& points, int pairs, Rng& rng);

/// max |Q(x) - Q(y)| / |x - y| over all pairs of the given points.
double lipschitz_estimate(const LearningStore& store, const Mat& points);

/// Number of (point, W vertex) pairs whose successor under the safe policy
/// leaves the safe set.
int count_invariance_failures(const LearningStore& store, const LinearSystem& sys,
                              const geometry::Polytope& W, const Mat& points, double tol = 1e-7);

}  // namespace lmpc::valuefn
