#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "lmpc/harness/experiment.h"

namespace lmpc::harness {

/// Per-episode numbers: the Monte-Carlo evaluation on the frozen store, then
/// learning from one of its runs and the checks on the new store.
struct EpisodeRecord {
  int episode = 0;
  int columns = 0;           // after the update
  int steps = 0;             // T of the learning run
  double value_before = 0;   // previous store at the start state
  double value_after = 0;    // updated store at the start state
  // Monte-Carlo on the frozen store.
  int runs = 0;
  double mean = 0;
  double std_error = 0;
  int reached = 0;
  int abnormal = 0;
  int violations = 0;
  int max_steps = 0;
  Vec totals;
  // Learning.
  int online = 0;
  int explored = 0;
  int dropped = 0;
  int cost_violations = 0;
  double cost_worst_margin = 0;
  int boundary_batches = 0;
  int sample_batches = 0;
  int fallback_batches = 0;
  int fallback_failures = 0;  // fallback states whose MPC solve failed
  double worst_descent_slope = -std::numeric_limits<double>::infinity();
  int unsteerable = 0;
  int invariance_points = 0;
  int invariance_failures = 0;
  double seconds = 0;  // wall clock, not written to files
};

struct CampaignOptions {
  mpc::TerminalMode mode = mpc::TerminalMode::kExpected;
  int episodes = 10;
  int mc_runs = 100;
  uint64_t seed = 2024;
  /// Files go to output_dir/<mode>/ when set.
  std::string output_dir;
  /// Continue after this stored version (read from output_dir); -1 starts
  /// from version 0.
  int resume_from = -1;
};

CampaignOptions campaign_options(const ExperimentConfig& config);

struct CampaignResult {
  mpc::TerminalMode mode = mpc::TerminalMode::kExpected;
  std::vector<EpisodeRecord> episodes;
  std::vector<valuefn::LearningStore> stores;  // versions first..last
  int first_version = 0;
};

using EpisodeObserver = std::function<void(const EpisodeRecord&)>;

/// Episodes resume_from+1 .. episodes: Monte-Carlo evaluation, learning from
/// the configured run, checks. Files per mode directory:
/// store_v<j>.csv, logs/episode_<j>.csv, mc_totals.csv, summary.csv.
CampaignResult run_campaign(const Experiment& ex, const CampaignOptions& options,
                            const EpisodeObserver& observer = {});

std::string mode_directory(const std::string& output_dir, mpc::TerminalMode mode);
std::string store_path(const std::string& mode_dir, int version);

/// Summary table rows (without timing), header first.
std::string summary_header();
std::string summary_row(const EpisodeRecord& r);

}  // namespace lmpc::harness
