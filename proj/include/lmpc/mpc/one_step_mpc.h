#pragma once

#include <string>
#include <vector>

#include "lmpc/common.h"
#include "lmpc/disturbance/disturbance_model.h"
#include "lmpc/solver/convex_program.h"
#include "lmpc/system.h"
#include "lmpc/valuefn/learning_store.h"

namespace lmpc::mpc {

/// How the successor value enters the cost: averaged over the disturbance
/// samples, or taken at the nominal successor only.
enum class TerminalMode { kExpected, kCertaintyEquivalent };
std::string to_string(TerminalMode mode);
TerminalMode parse_terminal_mode(const std::string& s);

/// kFast needs two states and one input; kAssembled works for any size.
enum class Route { kAuto, kFast, kAssembled };

struct MpcProblemSpec {
  Vec x;
  const ControlProblem* problem = nullptr;
  const valuefn::LearningStore* store = nullptr;
  const disturbance::DisturbanceModel* disturbance = nullptr;
  TerminalMode mode = TerminalMode::kExpected;
};

struct MpcOptions {
  Route route = Route::kAuto;
  /// Fill MpcSolution::coefficients (one vector per sample).
  bool want_coefficients = false;
  solver::SolverOptions solver;
};

struct MpcSolution {
  solver::SolveStatus status = solver::SolveStatus::kNumericalFailure;
  Vec u;
  double value = 0.0;          // stage cost + successor cost
  double stage_cost = 0.0;
  double successor_cost = 0.0;
  Vec nu;                      // multipliers of the terminal facets
  Vec gamma;                   // multipliers of the input facets
  std::vector<Vec> coefficients;
  std::string route;

  bool optimal() const { return status == solver::SolveStatus::kOptimal; }
};

/// min over u of l(x,u) + successor cost, subject to u in U and the nominal
/// successor in the tightened safe set.
MpcSolution solve_mpc(const MpcProblemSpec& spec, const MpcOptions& options = {});

/// Optimal input; throws InfeasibilityError when the problem has no solution.
Vec policy(const MpcProblemSpec& spec, const MpcOptions& options = {});

/// Gradient of the objective at the optimum recovered from the multipliers,
/// -[(H B)' nu + H_u' gamma].
Vec gradient_at_optimum(const MpcSolution& solution, const MpcProblemSpec& spec);

/// Objective at an arbitrary input; +inf when the input violates a constraint
/// by more than tol.
double objective_at(const MpcProblemSpec& spec, const Vec& u, double tol = 1e-9);

/// Same spec with the successor cost taken at the nominal successor only.
MpcProblemSpec certainty_equivalent_mode(MpcProblemSpec spec);

}  // namespace lmpc::mpc
