#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lmpc/common.h"
#include "lmpc/disturbance/disturbance_model.h"
#include "lmpc/geometry/polytope.h"
#include "lmpc/system.h"

namespace lmpc::init {

/// Gain of the infinite-horizon discrete LQR, u = K x. Iterates the Riccati
/// recursion until its relative residual drops below tol. Throws
/// SolverError after max_iterations.
Mat lqr_gain(const Mat& A, const Mat& B, const Mat& Q, const Mat& R, double tol = 1e-10,
             int max_iterations = 10000);

/// Cost matrix of the same recursion (the Riccati fixed point).
Mat riccati_solution(const Mat& A, const Mat& B, const Mat& Q, const Mat& R, double tol = 1e-10,
                     int max_iterations = 10000);

/// Max-abs difference between P and one Riccati step applied to P, relative
/// to max(1, |P|).
double riccati_residual(const Mat& A, const Mat& B, const Mat& Q, const Mat& R, const Mat& P);

double spectral_radius(const Mat& M);

/// Outer mRPI approximation of A+BK under W. Throws ConfigError when it does
/// not fit in X or when K maps it outside U.
geometry::Polytope build_target_set(const LinearSystem& sys, const Mat& K,
                                    const geometry::Polytope& W, const geometry::Polytope& X,
                                    const geometry::Polytope& U, double eps = 1e-3);

/// {K v : v in O}.
geometry::Polytope input_image(const Mat& K, const geometry::Polytope& O);

/// Nominal plan of a tube controller with fixed cross-section E.
struct TubePlan {
  Mat states;  // nx x (T+2), column k is the nominal state at step k
  Mat inputs;  // nu x (T+1)
  geometry::Polytope E;
  Mat K;
  int horizon = 0;  // T
};

/// Smallest T in [1, max_horizon] for which the nominal state can be steered
/// from x_start into O - E while staying in X - E with inputs in U - KE.
/// Throws ConfigError if x_start is not in X - E and InfeasibilityError if no
/// horizon works.
TubePlan plan_tube(const Vec& x_start, const LinearSystem& sys, const Mat& K,
                   const geometry::Polytope& E, const geometry::Polytope& X,
                   const geometry::Polytope& U, const geometry::Polytope& O,
                   int max_horizon = 200);

/// Tube-plan residuals: dynamics and constraint violations (max).
struct PlanResiduals {
  double dynamics = 0.0;
  double state = 0.0;
  double input = 0.0;
  double terminal = 0.0;
};
PlanResiduals plan_residuals(const TubePlan& plan, const LinearSystem& sys,
                             const geometry::Polytope& X, const geometry::Polytope& U,
                             const geometry::Polytope& O);

using StageCost = std::function<double(const Vec& x, const Vec& u)>;

/// Sampled states, inputs and cost-to-go values that seed the learning store.
struct InitialData {
  Mat X;                  // nx x l
  Mat U;                  // nu x l
  Vec J;                  // l
  std::vector<int> tube;  // -1 for target-set vertices, k for tube k
  int num_target_columns = 0;

  int size() const { return static_cast<int>(J.size()); }
};

/// Target-set vertices (cost 0, input K x) followed by the vertices of every
/// tube x_k + E. Tube inputs follow the tube policy; the last tube lies in O
/// and uses K x.
InitialData build_initial_data(const TubePlan& plan, const geometry::Polytope& O,
                               const StageCost& stage_cost);

/// Value of the initial sampled value function at a point; +inf outside its domain.
using ValueEvaluator = std::function<double(const Vec& x)>;

struct InitialConditionReport {
  std::vector<int> violators;
  Vec margins;  // J_i - (stage cost + expected successor value)
  double worst_margin = 0.0;
  bool ok() const { return violators.empty(); }
  std::string summary() const;
};

/// Checks J_i >= l(x_i, u_i) + sum_m p_m Q(A x_i + B u_i + w_m) - tol at every column.
InitialConditionReport validate_initial_condition(const InitialData& data,
                                                  const ValueEvaluator& value,
                                                  const disturbance::DisturbanceModel& dm,
                                                  const LinearSystem& sys,
                                                  const StageCost& stage_cost,
                                                  double tol = 1e-6);

}  // namespace lmpc::init
