#pragma once

#include <string>

#include "lmpc/common.h"
#include "lmpc/mpc/one_step_mpc.h"
#include "lmpc/random.h"

namespace lmpc::exploration {

enum class BatchMode { kBoundaryLp, kInSetSample, kFallback };
std::string to_string(BatchMode mode);

/// New states around one visited state, each with its MPC input and value.
struct ExplorationBatch {
  Mat states;  // nx x l_w
  Mat inputs;  // nu x l_w
  Vec costs;
  int step = 0;
  BatchMode mode = BatchMode::kInSetSample;
  Vec direction;          // input offset d (boundary LP only)
  double distance = 0.0;  // nu' H B d
  int dropped = 0;        // states whose MPC solve failed

  int size() const { return static_cast<int>(costs.size()); }
};

struct ExplorationOptions {
  double nu_threshold = 1e-7;
  double sample_scale = 1.0;  // standard deviation of in-set samples
  int max_rejections = 10000;
};

/// nu' H B d.
double distance_value(const Vec& nu, const Mat& H, const Mat& B, const Vec& d);

/// Exploration around x_k given the MPC solution there. With an active
/// terminal constraint the input is pushed along the boundary of the safe
/// set (one LP); otherwise states are sampled inside the safe set.
/// X_minus_W is the state set tightened by W.
ExplorationBatch explore_step(const mpc::MpcProblemSpec& spec, const mpc::MpcSolution& solution,
                              const geometry::Polytope& X_minus_W, int step, Rng& rng,
                              const ExplorationOptions& options = {},
                              const mpc::MpcOptions& mpc_options = {});

}  // namespace lmpc::exploration
