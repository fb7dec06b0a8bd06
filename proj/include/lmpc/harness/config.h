#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lmpc/common.h"
#include "lmpc/disturbance/disturbance_model.h"
#include "lmpc/exploration/exploration.h"
#include "lmpc/geometry/polytope.h"
#include "lmpc/mpc/one_step_mpc.h"

namespace lmpc::harness {

/// Everything that defines one experiment. Text form is JSON; sets accept
/// {"box": {"lo": [...], "hi": [...]}}, {"halfspaces": {"A": [[...]], "b": [...]}}
/// or {"vertices": [[...], ...]} (one point per row).
struct ExperimentConfig {
  Mat A, B;
  geometry::Polytope X, U, W;
  disturbance::DisturbanceDistribution distribution;
  Vec start;

  // Terminal feedback: LQR weights and the outer-approximation accuracy of
  // the target set.
  Mat lqr_Q, lqr_R;
  double target_eps = 1e-3;
  int max_plan_horizon = 200;

  // Disturbance discretization. model_file, when set, replaces building.
  int num_samples = 100;
  int num_weight_draws = 10000;
  int num_delta_draws = 10000;
  uint64_t disturbance_seed = 1;
  std::string model_file;

  // Closed loop and learning.
  uint64_t seed = 2024;
  int episodes = 10;
  int max_steps = 200;
  int mc_runs = 100;
  int learning_run = 0;
  mpc::TerminalMode mode = mpc::TerminalMode::kExpected;
  exploration::ExplorationOptions exploration;
  double target_tol = 1e-7;
  double cost_condition_tol = 1e-6;
  int invariance_points = 100;
  int fixed_point_points = 100;

  // Gridded value iteration.
  double vi_spacing = 1.0;
  double vi_tol = 1e-2;
  int vi_max_iter = 20;

  std::string output_dir = "out";
};

/// The double-integrator example shipped in configs/default.json.
ExperimentConfig default_config();

std::string to_json(const ExperimentConfig& config);
/// Missing keys keep their defaults. Throws ConfigError on malformed input
/// or when validate() fails.
ExperimentConfig from_json(const std::string& text);

/// Applies "dotted.key=value" overrides to the JSON text before parsing.
/// Values are read as JSON when possible, as strings otherwise.
ExperimentConfig load_config(const std::string& path, const std::vector<std::string>& overrides = {});
ExperimentConfig parse_config(const std::string& text, const std::vector<std::string>& overrides = {});

/// Shapes agree, sets are bounded and non-empty, counts are positive, the
/// start lies in X and referenced files exist. Throws ConfigError.
void validate(const ExperimentConfig& config);

}  // namespace lmpc::harness
