#include "lmpc/valuefn/diagnostics.h"

#include <cmath>

#include "lmpc/parallel.h"

namespace lmpc::valuefn {

Mat sample_safe_set(const LearningStore& store, int count, Rng& rng) {
  const geometry::Polytope& S = store.safe_set();
  const Vec lo = S.vertices().rowwise().minCoeff(), hi = S.vertices().rowwise().maxCoeff();
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  Mat pts(store.nx(), count);
  Vec x(store.nx());
  for (int c = 0; c < count;) {
    for (int i = 0; i < x.size(); ++i) x(i) = lo(i) + (hi(i) - lo(i)) * u01(rng);
    if (geometry::contains(S, x, 0.0)) pts.col(c++) = x;
  }
  return pts;
}

init::InitialConditionReport check_cost_condition(const LearningStore& store,
                                                  const disturbance::DisturbanceModel& dm,
                                                  const LinearSystem& sys,
                                                  const init::StageCost& stage_cost, double tol) {
  init::InitialData view;
  view.X = store.X();
  view.U = store.U();
  view.J = store.J();
  view.tube.assign(store.size(), -1);
  return init::validate_initial_condition(
      view, [&](const Vec& x) { return value(store, x); }, dm, sys, stage_cost, tol);
}

double max_value_increase(const LearningStore& older, const LearningStore& newer,
                          const Mat& points) {
  std::vector<double> diff(points.cols());
  parallel_for(static_cast<int>(points.cols()), [&](int i) {
    diff[i] = evaluate(newer, points.col(i)).value - evaluate(older, points.col(i)).value;
  });
  double worst = -std::numeric_limits<double>::infinity();
  for (double d : diff) worst = std::max(worst, d);
  return worst;
}

double max_convexity_violation(const LearningStore& store, const Mat& points, int pairs,
                               Rng& rng) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(points.cols()) - 1);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  double worst = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < pairs; ++k) {
    const Vec x = points.col(pick(rng)), y = points.col(pick(rng));
    const double t = u01(rng);
    const double mid = evaluate(store, t * x + (1 - t) * y).value;
    const double chord = t * evaluate(store, x).value + (1 - t) * evaluate(store, y).value;
    worst = std::max(worst, mid - chord);
  }
  return worst;
}

double lipschitz_estimate(const LearningStore& store, const Mat& points) {
  const int n = static_cast<int>(points.cols());
  Vec v(n);
  for (int i = 0; i < n; ++i) v(i) = evaluate(store, points.col(i)).value;
  double L = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double dist = (points.col(i) - points.col(j)).norm();
      if (dist > 1e-12) L = std::max(L, std::abs(v(i) - v(j)) / dist);
    }
  return L;
}

int count_invariance_failures(const LearningStore& store, const LinearSystem& sys,
                              const geometry::Polytope& W, const Mat& points, double tol) {
  const Mat VW = W.completed().vertices();
  std::vector<int> fails(points.cols(), 0);
  parallel_for(static_cast<int>(points.cols()), [&](int i) {
    const Vec x = points.col(i);
    const Vec next = sys.nominal(x, safe_policy(store, x));
    for (int m = 0; m < VW.cols(); ++m)
      if (!geometry::contains(store.safe_set(), next + VW.col(m), tol)) ++fails[i];
  });
  int total = 0;
  for (int f : fails) total += f;
  return total;
}

}  // namespace lmpc::valuefn
