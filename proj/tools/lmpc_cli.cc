// Command-line front end: init, run, evaluate, explore-only, baseline-vi, report.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lmpc/baselines/value_iteration.h"
#include "lmpc/harness/campaign.h"
#include "lmpc/harness/config.h"
#include "lmpc/harness/experiment.h"
#include "lmpc/harness/manifest.h"
#include "lmpc/harness/report.h"
#include "lmpc/io/number_format.h"

namespace fs = std::filesystem;
using namespace lmpc;
using namespace lmpc::harness;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitSolver = 4;

struct Args {
  std::string config_path;
  std::string out = "out";
  std::optional<int> episodes;
  std::optional<uint64_t> seed;
  std::optional<std::string> mode;
  std::optional<int> mc_runs;
  std::optional<double> vi_grid;
  int version = 0;
  int resume = -1;
  std::vector<std::string> overrides;
  std::string command_line;
};

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + path.string());
  f << text;
}

mpc::TerminalMode parse_mode(const std::string& s) {
  if (s == "expected") return mpc::TerminalMode::kExpected;
  if (s == "ce") return mpc::TerminalMode::kCertaintyEquivalent;
  throw ConfigError("unknown mode '" + s + "' (expected|ce)");
}

fs::path saved_config(const Args& a) { return fs::path(a.out) / "config.json"; }
fs::path saved_model(const Args& a) { return fs::path(a.out) / "disturbance_model.json"; }

// Config for a command. init reads --config (or the built-in example); the
// other commands read the copy init saved unless --config is given.
ExperimentConfig resolve_config(const Args& a, bool is_init) {
  std::string path = a.config_path;
  if (path.empty() && !is_init) {
    if (!fs::exists(saved_config(a)))
      throw ConfigError("no " + saved_config(a).string() + "; run init first or pass --config");
    path = saved_config(a).string();
  }
  ExperimentConfig c = path.empty() ? parse_config(to_json(default_config()), a.overrides)
                                    : load_config(path, a.overrides);
  if (a.episodes) c.episodes = *a.episodes;
  if (a.seed) c.seed = *a.seed;
  if (a.mode) c.mode = parse_mode(*a.mode);
  if (a.mc_runs) c.mc_runs = *a.mc_runs;
  if (a.vi_grid) c.vi_spacing = *a.vi_grid;
  c.output_dir = a.out;
  // Reuse the model init wrote when the config came from the same place.
  if (!is_init && a.config_path.empty() && c.model_file.empty() && fs::exists(saved_model(a)))
    c.model_file = saved_model(a).string();
  validate(c);
  return c;
}

std::string matrix_rows(const Mat& m, int col) {
  std::string s;
  for (int r = 0; r < m.rows(); ++r) s += ',' + io::format_number(m(r, col));
  return s;
}

std::string coord_header(char prefix, int n) {
  std::string s;
  for (int i = 1; i <= n; ++i) s += ',' + std::string(1, prefix) + std::to_string(i);
  return s;
}

int cmd_init(const Args& a) {
  ExperimentConfig c = resolve_config(a, true);
  const Experiment ex = setup_experiment(c);
  fs::create_directories(fs::path(a.out) / "init");
  // The saved config points at the saved model so later commands skip the build.
  ExperimentConfig saved = c;
  saved.model_file = "disturbance_model.json";
  disturbance::save_file(ex.dm, saved_model(a).string());
  write_text(saved_config(a), to_json(saved) + "\n");

  const int nx = static_cast<int>(ex.plan.states.rows());
  const int nu = static_cast<int>(ex.plan.inputs.rows());
  std::ostringstream plan;
  plan << "step" << coord_header('x', nx) << coord_header('u', nu) << '\n';
  for (int k = 0; k < ex.plan.states.cols(); ++k) {
    plan << k << matrix_rows(ex.plan.states, k);
    if (k < ex.plan.inputs.cols())
      plan << matrix_rows(ex.plan.inputs, k);
    else
      plan << std::string(nu, ',');
    plan << '\n';
  }
  write_text(fs::path(a.out) / "init" / "tube_plan.csv", plan.str());

  std::ostringstream data;
  data << "column,tube" << coord_header('x', nx) << coord_header('u', nu) << ",cost,margin\n";
  for (int i = 0; i < ex.initial.size(); ++i)
    data << i << ',' << ex.initial.tube[i] << matrix_rows(ex.initial.X, i)
         << matrix_rows(ex.initial.U, i) << ',' << io::format_number(ex.initial.J(i)) << ','
         << io::format_number(ex.initial_report.margins(i)) << '\n';
  write_text(fs::path(a.out) / "init" / "initial_data.csv", data.str());
  valuefn::save_columns_file(ex.store0, (fs::path(a.out) / "init" / "store_v0.csv").string());

  std::printf("init: tube horizon %d, %d columns (%d target), Q0(start) %s\n", ex.plan.horizon,
              ex.store0.size(), ex.initial.num_target_columns,
              io::format_number(valuefn::value(ex.store0, c.start)).c_str());
  write_manifest(a.out, c, a.command_line);
  return 0;
}

std::vector<mpc::TerminalMode> modes_for(const Args& a) {
  if (a.mode) return {parse_mode(*a.mode)};
  return {mpc::TerminalMode::kExpected, mpc::TerminalMode::kCertaintyEquivalent};
}

int cmd_run(const Args& a) {
  const ExperimentConfig c = resolve_config(a, false);
  const Experiment ex = setup_experiment(c);
  for (mpc::TerminalMode mode : modes_for(a)) {
    CampaignOptions opt = campaign_options(c);
    opt.mode = mode;
    opt.resume_from = a.resume;
    std::printf("mode %s\n%8s %6s %14s %8s %9s\n", mpc::to_string(mode).c_str(), "episode",
                "steps", "Q(start)", "columns", "seconds");
    run_campaign(ex, opt, [](const EpisodeRecord& r) {
      std::printf("%8d %6d %14.6f %8d %9.3f\n", r.episode, r.steps, r.value_after, r.columns,
                  r.seconds);
      std::fflush(stdout);
    });
  }
  write_manifest(a.out, c, a.command_line);
  return 0;
}

// Monte-Carlo evaluation of one stored version, on the same disturbance
// streams the campaign uses for the episode after it.
int cmd_evaluate(const Args& a) {
  const ExperimentConfig c = resolve_config(a, false);
  const Experiment ex = setup_experiment(c);
  for (mpc::TerminalMode mode : modes_for(a)) {
    const std::string dir = mode_directory(a.out, mode);
    const auto store = valuefn::load_columns_file(store_path(dir, a.version), ex.problem.W);
    const MonteCarloSummary mc = monte_carlo_eval(ex, store, mode, a.version + 1, c.mc_runs, c.seed);
    std::ostringstream os;
    os << "run,steps,total_cost,reached,abnormal,violations\n";
    for (size_t i = 0; i < mc.logs.size(); ++i)
      os << i << ',' << mc.logs[i].steps << ',' << io::format_number(mc.totals(i)) << ','
         << mc.logs[i].reached << ',' << mc.logs[i].abnormal << ','
         << mc.logs[i].state_violations + mc.logs[i].input_violations << '\n';
    write_text(fs::path(dir) / ("evaluate_v" + std::to_string(a.version) + ".csv"), os.str());
    std::printf("%s v%d: mean %.6f  se %.6f  reached %d/%zu  violations %d  Q(start) %.6f\n",
                mpc::to_string(mode).c_str(), a.version, mc.mean, mc.std_error, mc.reached,
                mc.logs.size(), mc.violations, valuefn::value(store, c.start));
  }
  write_manifest(a.out, c, a.command_line);
  return 0;
}

// One learning step from a stored version without the Monte-Carlo batch.
int cmd_explore_only(const Args& a) {
  const ExperimentConfig c = resolve_config(a, false);
  const Experiment ex = setup_experiment(c);
  for (mpc::TerminalMode mode : modes_for(a)) {
    const std::string dir = mode_directory(a.out, mode);
    const auto store = valuefn::load_columns_file(store_path(dir, a.version), ex.problem.W);
    const EpisodeLog log = run_episode(ex, store, mode, a.version + 1, c.learning_run, c.seed);
    const LearnResult learned = learn_episode(ex, store, log, c.seed);
    const fs::path out = fs::path(dir) / "explore";
    fs::create_directories(out);
    valuefn::save_columns_file(learned.store, store_path(out.string(), a.version + 1));
    std::ostringstream os;
    os << "step,mode,size,dropped,descent_slope,distance,unsteerable\n";
    for (const BatchRecord& b : learned.batches)
      os << b.step << ',' << exploration::to_string(b.mode) << ',' << b.size << ',' << b.dropped
         << ',' << io::format_number(b.descent_slope) << ',' << io::format_number(b.distance)
         << ',' << b.unsteerable << '\n';
    write_text(out / ("batches_v" + std::to_string(a.version + 1) + ".csv"), os.str());
    std::printf("%s v%d -> v%d: %d online, %d explored, %d dropped, Q(start) %.6f -> %.6f\n",
                mpc::to_string(mode).c_str(), a.version, a.version + 1, learned.online,
                learned.explored, learned.dropped, learned.start_value_before,
                learned.start_value_after);
  }
  write_manifest(a.out, c, a.command_line);
  return 0;
}

int cmd_baseline_vi(const Args& a) {
  const ExperimentConfig c = resolve_config(a, false);
  const Experiment ex = setup_experiment(c);
  baselines::ValueIterationOptions opt;
  opt.spacing = c.vi_spacing;
  opt.tol = c.vi_tol;
  opt.max_iter = c.vi_max_iter;
  const auto v = baselines::value_iteration(ex.problem, ex.dm, opt);
  const fs::path dir = fs::path(a.out) / "vi";
  fs::create_directories(dir);
  baselines::export_table_file(v, (dir / "values.csv").string());
  std::ostringstream os;
  os << "iteration,sup_change\n";
  for (size_t i = 0; i < v.history.size(); ++i)
    os << i + 1 << ',' << io::format_number(v.history[i]) << '\n';
  write_text(dir / "sweeps.csv", os.str());
  const double at_start = baselines::interpolate(v, ex.problem.W, c.start);
  std::printf("vi: %d points, %d feasible, %d sweeps, last change %.6g, %s, value(start) %.6f\n",
              v.size(), v.num_feasible(), v.iterations, v.history.back(),
              v.converged ? "converged" : "not converged", at_start);
  write_manifest(a.out, c, a.command_line);
  return 0;
}

int cmd_report(const Args& a) {
  for (const std::string& p : write_report(a.out)) std::printf("wrote %s\n", p.c_str());
  if (fs::exists(saved_config(a)))
    write_manifest(a.out, load_config(saved_config(a).string()), a.command_line);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Learning MPC experiments for uncertain linear systems"};
  app.require_subcommand(1);
  Args a;
  for (int i = 0; i < argc; ++i) a.command_line += (i ? " " : "") + std::string(argv[i]);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", a.config_path, "Experiment configuration (JSON)");
    sub->add_option("--out", a.out, "Output directory")->capture_default_str();
    sub->add_option("--episodes", a.episodes, "Number of episodes");
    sub->add_option("--seed", a.seed, "Closed-loop and exploration seed");
    sub->add_option("--mode", a.mode, "Terminal cost mode")
        ->check(CLI::IsMember({"expected", "ce"}));
    sub->add_option("--mc-runs", a.mc_runs, "Monte-Carlo runs per episode");
    sub->add_option("--vi-grid", a.vi_grid, "Value-iteration grid spacing");
    sub->add_option("overrides", a.overrides, "key=value overrides, e.g. disturbance.samples=50");
  };
  auto* init = app.add_subcommand("init", "Build the disturbance model, tube plan and store v0");
  auto* run = app.add_subcommand("run", "Run episodes and store every version");
  auto* evaluate = app.add_subcommand("evaluate", "Monte-Carlo evaluation of a stored version");
  auto* explore = app.add_subcommand("explore-only", "One learning step from a stored version");
  auto* vi = app.add_subcommand("baseline-vi", "Gridded value iteration");
  auto* report = app.add_subcommand("report", "Plot-ready tables from an output directory");
  for (auto* s : {init, run, evaluate, explore, vi}) common(s);
  report->add_option("--out", a.out, "Output directory")->capture_default_str();
  run->add_option("--resume", a.resume, "Continue after this stored version");
  evaluate->add_option("--version", a.version, "Stored version to evaluate");
  explore->add_option("--version", a.version, "Stored version to learn from");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*init) return cmd_init(a);
    if (*run) return cmd_run(a);
    if (*evaluate) return cmd_evaluate(a);
    if (*explore) return cmd_explore_only(a);
    if (*vi) return cmd_baseline_vi(a);
    if (*report) return cmd_report(a);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const InfeasibilityError& e) {
    std::fprintf(stderr, "infeasible: %s\n", e.what());
    return kExitInfeasible;
  } catch (const SolverError& e) {
    std::fprintf(stderr, "solver failure: %s\n", e.what());
    return kExitSolver;
  } catch (const DegenerateHullError& e) {
    std::fprintf(stderr, "solver failure: %s\n", e.what());
    return kExitSolver;
  }
  return 0;
}
