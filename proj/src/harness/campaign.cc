#include "lmpc/harness/campaign.h"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lmpc/io/number_format.h"
#include "lmpc/valuefn/diagnostics.h"

namespace lmpc::harness {

namespace fs = std::filesystem;

namespace {

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + path.string());
  f << text;
}

// Rows of a delimited file whose first field is an episode number <= last,
// header included.
std::string kept_rows(const fs::path& path, int last) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot resume: missing " + path.string());
  std::string line, out;
  bool header = true;
  while (std::getline(f, line)) {
    if (header || std::stoi(line.substr(0, line.find(','))) <= last) out += line + '\n';
    header = false;
  }
  return out;
}

std::string totals_rows(const EpisodeRecord& r, const MonteCarloSummary& mc) {
  std::ostringstream os;
  for (size_t i = 0; i < mc.logs.size(); ++i)
    os << r.episode << ',' << i << ',' << mc.logs[i].steps << ','
       << io::format_number(mc.totals(i)) << ',' << mc.logs[i].reached << '\n';
  return os.str();
}

}  // namespace

CampaignOptions campaign_options(const ExperimentConfig& config) {
  CampaignOptions o;
  o.mode = config.mode;
  o.episodes = config.episodes;
  o.mc_runs = config.mc_runs;
  o.seed = config.seed;
  o.output_dir = config.output_dir;
  return o;
}

std::string mode_directory(const std::string& output_dir, mpc::TerminalMode mode) {
  return (fs::path(output_dir) / mpc::to_string(mode)).string();
}

std::string store_path(const std::string& mode_dir, int version) {
  return (fs::path(mode_dir) / ("store_v" + std::to_string(version) + ".csv")).string();
}

std::string summary_header() {
  return "episode,steps,value_before,value_after,columns,mc_runs,mc_mean,mc_std_error,reached,"
         "abnormal,violations,max_steps,online,explored,dropped,cost_violations,"
         "cost_worst_margin,boundary_batches,sample_batches,fallback_batches,fallback_failures,"
         "worst_descent_slope,unsteerable,invariance_points,invariance_failures\n";
}

std::string summary_row(const EpisodeRecord& r) {
  std::ostringstream os;
  using io::format_number;
  os << r.episode << ',' << r.steps << ',' << format_number(r.value_before) << ','
     << format_number(r.value_after) << ',' << r.columns << ',' << r.runs << ','
     << format_number(r.mean) << ',' << format_number(r.std_error) << ',' << r.reached << ','
     << r.abnormal << ',' << r.violations << ',' << r.max_steps << ',' << r.online << ','
     << r.explored << ',' << r.dropped << ',' << r.cost_violations << ','
     << format_number(r.cost_worst_margin) << ',' << r.boundary_batches << ','
     << r.sample_batches << ',' << r.fallback_batches << ',' << r.fallback_failures << ','
     << format_number(r.worst_descent_slope) << ',' << r.unsteerable << ','
     << r.invariance_points << ',' << r.invariance_failures << '\n';
  return os.str();
}

CampaignResult run_campaign(const Experiment& ex, const CampaignOptions& opt,
                            const EpisodeObserver& observer) {
  if (opt.episodes < 0 || opt.mc_runs <= 0) throw ConfigError("campaign: bad episode or run count");
  if (ex.config.learning_run >= opt.mc_runs)
    throw ConfigError("campaign: learning_run must index one of the Monte-Carlo runs");
  const bool files = !opt.output_dir.empty();
  const std::string dir = files ? mode_directory(opt.output_dir, opt.mode) : "";
  CampaignResult result;
  result.mode = opt.mode;
  int first = 1;
  valuefn::LearningStore store = ex.store0;
  std::string summary = summary_header();
  std::string totals = "episode,run,steps,total_cost,reached\n";
  if (opt.resume_from >= 0) {
    if (!files) throw ConfigError("campaign: resuming needs an output directory");
    store = valuefn::load_columns_file(store_path(dir, opt.resume_from), ex.problem.W);
    if (store.episode() != opt.resume_from)
      throw ConfigError("campaign: stored version does not match its file name");
    first = opt.resume_from + 1;
    summary = kept_rows(fs::path(dir) / "summary.csv", opt.resume_from);
    totals = kept_rows(fs::path(dir) / "mc_totals.csv", opt.resume_from);
  }
  result.first_version = first - 1;
  result.stores.push_back(store);
  if (files) {
    fs::create_directories(fs::path(dir) / "logs");
    if (opt.resume_from < 0) valuefn::save_columns_file(store, store_path(dir, 0));
  }

  for (int j = first; j <= opt.episodes; ++j) {
    const auto t0 = std::chrono::steady_clock::now();
    EpisodeRecord r;
    r.episode = j;
    const MonteCarloSummary mc = monte_carlo_eval(ex, store, opt.mode, j, opt.mc_runs, opt.seed);
    r.runs = opt.mc_runs;
    r.mean = mc.mean;
    r.std_error = mc.std_error;
    r.reached = mc.reached;
    r.abnormal = mc.abnormal;
    r.violations = mc.violations;
    r.max_steps = mc.max_steps;
    r.totals = mc.totals;

    const EpisodeLog& log = mc.logs[ex.config.learning_run];
    r.steps = log.steps;
    LearnResult learned = learn_episode(ex, store, log, opt.seed);
    r.value_before = learned.start_value_before;
    r.value_after = learned.start_value_after;
    r.columns = learned.store.size();
    r.online = learned.online;
    r.explored = learned.explored;
    r.dropped = learned.dropped;
    r.cost_violations = static_cast<int>(learned.cost_check.violators.size());
    r.cost_worst_margin = learned.cost_check.worst_margin;
    for (const BatchRecord& b : learned.batches) {
      switch (b.mode) {
        case exploration::BatchMode::kBoundaryLp:
          ++r.boundary_batches;
          r.worst_descent_slope = std::max(r.worst_descent_slope, b.descent_slope);
          break;
        case exploration::BatchMode::kInSetSample: ++r.sample_batches; break;
        case exploration::BatchMode::kFallback:
          ++r.fallback_batches;
          r.fallback_failures += b.dropped;
          break;
      }
      r.unsteerable += b.unsteerable;
    }
    store = std::move(learned.store);

    Rng rng = make_rng(opt.seed, {kStreamProperty, static_cast<uint64_t>(j)});
    const Mat pts = valuefn::sample_safe_set(store, ex.config.invariance_points, rng);
    r.invariance_points = static_cast<int>(pts.cols());
    r.invariance_failures = valuefn::count_invariance_failures(store, ex.problem.sys, ex.problem.W, pts);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    if (files) {
      valuefn::save_columns_file(store, store_path(dir, j));
      save_log_file(log, (fs::path(dir) / "logs" / ("episode_" + std::to_string(j) + ".csv")).string());
      summary += summary_row(r);
      totals += totals_rows(r, mc);
      write_text(fs::path(dir) / "summary.csv", summary);
      write_text(fs::path(dir) / "mc_totals.csv", totals);
    }
    result.stores.push_back(store);
    result.episodes.push_back(r);
    if (observer) observer(r);
  }
  if (files && opt.episodes < first) {
    write_text(fs::path(dir) / "summary.csv", summary);
    write_text(fs::path(dir) / "mc_totals.csv", totals);
  }
  return result;
}

}  // namespace lmpc::harness
