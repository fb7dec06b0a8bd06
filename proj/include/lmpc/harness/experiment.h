#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lmpc/common.h"
#include "lmpc/disturbance/disturbance_model.h"
#include "lmpc/exploration/exploration.h"
#include "lmpc/harness/config.h"
#include "lmpc/init/initialization.h"
#include "lmpc/mpc/one_step_mpc.h"
#include "lmpc/system.h"
#include "lmpc/valuefn/learning_store.h"

namespace lmpc::harness {

/// The derived objects of a configuration: terminal feedback and target set,
/// disturbance model, tube plan and the version-0 store.
struct Experiment {
  ExperimentConfig config;
  ControlProblem problem;
  disturbance::DisturbanceModel dm;
  geometry::Polytope X_minus_W;
  init::TubePlan plan;
  init::InitialData initial;
  init::InitialConditionReport initial_report;
  valuefn::LearningStore store0;

  init::StageCost stage_cost() const;
  double stage_cost(const Vec& x, const Vec& u) const;
  bool in_target(const Vec& x) const;
};

/// Builds everything up to store version 0. Throws ConfigError for a bad
/// configuration and InfeasibilityError when no valid initialization exists.
Experiment setup_experiment(const ExperimentConfig& config);
/// Same, with a given disturbance model instead of building one.
Experiment setup_experiment(const ExperimentConfig& config, disturbance::DisturbanceModel dm);

/// One closed-loop run. Column k of states is x_k for k = 0..T; inputs has
/// the applied inputs plus the MPC input at x_T; values has the MPC value at
/// every state.
struct EpisodeLog {
  int episode = 0;
  int run = 0;
  mpc::TerminalMode mode = mpc::TerminalMode::kExpected;
  Mat states;        // nx x (T+1)
  Mat inputs;        // nu x (T+1)
  Mat disturbances;  // nx x T
  Vec stage_costs;   // T
  Vec values;        // T+1
  int steps = 0;     // T
  bool reached = false;
  bool abnormal = false;  // stopped at max_steps outside the target
  int state_violations = 0;
  int input_violations = 0;
  int solves = 0;

  double total_cost() const { return stage_costs.sum(); }
};

/// Stream of closed-loop disturbances for (episode, run).
Rng closed_loop_rng(uint64_t seed, int episode, int run);

/// Closed loop from the configured start with the store frozen. Stops in the
/// target set or at max_steps. Throws InfeasibilityError when the MPC has no
/// solution.
EpisodeLog run_episode(const Experiment& ex, const valuefn::LearningStore& store,
                       mpc::TerminalMode mode, int episode, int run, uint64_t seed);

struct MonteCarloSummary {
  std::vector<EpisodeLog> logs;
  Vec totals;
  double mean = 0.0;
  double std_error = 0.0;
  int reached = 0;
  int abnormal = 0;
  int violations = 0;
  int max_steps = 0;
};

/// Independent closed loops on the frozen store, run in parallel.
MonteCarloSummary monte_carlo_eval(const Experiment& ex, const valuefn::LearningStore& store,
                                   mpc::TerminalMode mode, int episode, int runs, uint64_t seed);

struct BatchRecord {
  int step = 0;
  exploration::BatchMode mode = exploration::BatchMode::kInSetSample;
  int size = 0;
  int dropped = 0;
  double descent_slope = 0.0;  // gradient' d, boundary LP only
  double distance = 0.0;
  int unsteerable = 0;         // (state, W vertex) pairs leaving the safe set
};

struct LearnResult {
  valuefn::LearningStore store;
  valuefn::EpisodeAdditions additions;
  std::vector<BatchRecord> batches;
  int online = 0;
  int explored = 0;
  int dropped = 0;
  init::InitialConditionReport cost_check;
  double start_value_before = 0.0;
  double start_value_after = 0.0;
};

/// Explores around every logged state, appends online then exploration
/// columns, updates the store and re-checks the cost condition on every
/// column. A failed check throws InfeasibilityError in expected mode and is
/// only reported in certainty-equivalent mode.
LearnResult learn_episode(const Experiment& ex, const valuefn::LearningStore& store,
                          const EpisodeLog& log, uint64_t seed);

/// Delimited text: a "# ..." metadata line, a header row, then one row per
/// step k = 0..T ("step,x1..,u1..,w1..,stage_cost,value"; the last row has
/// empty disturbance and stage-cost fields).
std::string save_log(const EpisodeLog& log);
EpisodeLog load_log(const std::string& text);
void save_log_file(const EpisodeLog& log, const std::string& path);
EpisodeLog load_log_file(const std::string& path);

}  // namespace lmpc::harness
