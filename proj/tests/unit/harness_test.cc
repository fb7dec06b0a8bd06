#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "lmpc/harness/campaign.h"
#include "lmpc/harness/config.h"
#include "lmpc/harness/experiment.h"
#include "lmpc/harness/manifest.h"
#include "lmpc/harness/report.h"
#include "lmpc/harness/stage_cost.h"
#include "lmpc/baselines/value_iteration.h"
#include "lmpc/valuefn/learning_store.h"

namespace lmpc::harness {
namespace {

namespace fs = std::filesystem;

Vec v2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}

// The benchmark with a lighter disturbance model and few runs.
ExperimentConfig small_config() {
  ExperimentConfig c = default_config();
  c.num_samples = 20;
  c.num_weight_draws = 200;
  c.num_delta_draws = 200;
  c.episodes = 2;
  c.mc_runs = 6;
  return c;
}

const Experiment& small() {
  static const Experiment ex = setup_experiment(small_config());
  return ex;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

fs::path scratch_dir(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / ("lmpc_harness_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

TEST(StageCost, ZeroOnTargetAndUnitOnBox) {
  const auto O = geometry::Polytope::box(v2(-1, -1), v2(1, 1)).completed();
  const auto KO = geometry::Polytope::box(Vec::Constant(1, -1), Vec::Constant(1, 1)).completed();
  EXPECT_EQ(stage_cost(v2(0.3, -0.9), Vec::Constant(1, 0.5), O, KO), 0.0);
  EXPECT_NEAR(stage_cost(v2(2, 0), Vec::Zero(1), O, KO), 1.0, 1e-12);
  EXPECT_NEAR(stage_cost(v2(2, 0), Vec::Constant(1, 3), O, KO), 5.0, 1e-12);
}

TEST(StageCost, MatchesDenseBoundarySampling) {
  const Experiment& ex = small();
  const geometry::Polytope& O = ex.problem.O;
  // Dense points on the boundary of O, vertices ordered by angle.
  const Mat& raw = O.vertices();
  const Vec c = raw.rowwise().mean();
  std::vector<int> order(raw.cols());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::atan2(raw(1, a) - c(1), raw(0, a) - c(0)) < std::atan2(raw(1, b) - c(1), raw(0, b) - c(0));
  });
  Mat V(2, raw.cols());
  for (size_t i = 0; i < order.size(); ++i) V.col(i) = raw.col(order[i]);
  std::vector<Vec> boundary;
  const int k = static_cast<int>(V.cols());
  for (int i = 0; i < k; ++i)
    for (int s = 0; s < 400; ++s)
      boundary.push_back(V.col(i) + (V.col((i + 1) % k) - V.col(i)) * (s / 400.0));
  const double ka = ex.problem.KO.vertices().minCoeff(), kb = ex.problem.KO.vertices().maxCoeff();
  Rng rng = make_rng(11);
  std::uniform_real_distribution<double> u(-4, 4);
  for (int t = 0; t < 40; ++t) {
    const Vec x = v2(u(rng), u(rng));
    const Vec in = Vec::Constant(1, u(rng));
    double best = geometry::contains(O, x, 0.0) ? 0.0 : std::numeric_limits<double>::infinity();
    for (const Vec& b : boundary) best = std::min(best, (x - b).squaredNorm());
    const double du = std::max({ka - in(0), in(0) - kb, 0.0});
    EXPECT_NEAR(stage_cost(x, in, O, ex.problem.KO), best + du * du, 1e-3) << x.transpose();
  }
}

TEST(Config, RoundTripsThroughJson) {
  const ExperimentConfig c = small_config();
  const std::string text = to_json(c);
  EXPECT_EQ(to_json(from_json(text)), text);
  EXPECT_EQ(from_json(text).num_samples, 20);
}

TEST(Config, AppliesOverrides) {
  const ExperimentConfig c =
      parse_config(to_json(default_config()), {"episodes=3", "mode=ce", "vi.spacing=2.5",
                                              "start=[20, 0]", "output_dir=elsewhere"});
  EXPECT_EQ(c.episodes, 3);
  EXPECT_EQ(c.mode, mpc::TerminalMode::kCertaintyEquivalent);
  EXPECT_EQ(c.vi_spacing, 2.5);
  EXPECT_EQ(c.start, v2(20, 0));
  EXPECT_EQ(c.output_dir, "elsewhere");
  EXPECT_THROW(parse_config("{}", {"episodes"}), ConfigError);
}

TEST(Config, AcceptsSetDescriptions) {
  const std::string text = R"({
    "sets": {"X": {"vertices": [[-10, -40], [40, -40], [40, 10], [-10, 10]]},
             "U": {"halfspaces": {"A": [[1], [-1]], "b": [5, 5]}}}
  })";
  const ExperimentConfig c = parse_config(text);
  EXPECT_TRUE(geometry::contains(c.X, v2(39, -39)));
  EXPECT_FALSE(geometry::contains(c.U, Vec::Constant(1, 5.5)));
}

TEST(Config, RejectsBadInput) {
  EXPECT_THROW(parse_config("not json"), ConfigError);
  EXPECT_THROW(parse_config(R"({"start": [50, 0]})"), ConfigError);
  try {
    parse_config(R"({"start": [50, 0]})");
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("not in the state constraint set"), std::string::npos);
  }
  EXPECT_THROW(parse_config(R"({"start": [1, 2, 3]})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"mc_runs": 0})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"learning_run": 7, "mc_runs": 5})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"disturbance": {"model_file": "/nonexistent/model.json"}})"),
               ConfigError);
  EXPECT_THROW(parse_config(R"({"sets": {"X": {"ball": 1}}})"), ConfigError);
  EXPECT_THROW(load_config("/nonexistent/config.json"), ConfigError);
}

TEST(Config, ShippedDefaultMatchesBuiltIn) {
  const fs::path shipped = fs::path(LMPC_SOURCE_DIR) / "configs" / "default.json";
  ASSERT_TRUE(fs::exists(shipped));
  EXPECT_EQ(to_json(load_config(shipped.string())), to_json(default_config()));
}

TEST(Setup, BuildsAValidVersionZero) {
  const Experiment& ex = small();
  EXPECT_TRUE(ex.initial_report.ok());
  EXPECT_EQ(ex.store0.episode(), 0);
  EXPECT_EQ(ex.store0.size(), ex.initial.size());
  for (int i = 0; i < ex.initial.num_target_columns; ++i) EXPECT_EQ(ex.initial.J(i), 0.0);
  EXPECT_TRUE(geometry::contains(ex.store0.safe_set(), ex.config.start));
}

TEST(Episode, StartInTargetStopsImmediately) {
  ExperimentConfig c = small_config();
  c.start = v2(0, 0);
  const Experiment ex = setup_experiment(c);
  const EpisodeLog log = run_episode(ex, ex.store0, mpc::TerminalMode::kExpected, 1, 0, 3);
  EXPECT_EQ(log.steps, 0);
  EXPECT_TRUE(log.reached);
  EXPECT_EQ(log.states.cols(), 1);
  EXPECT_EQ(log.total_cost(), 0.0);
  const MonteCarloSummary mc = monte_carlo_eval(ex, ex.store0, mpc::TerminalMode::kExpected, 1, 4, 3);
  EXPECT_EQ(mc.totals, Vec::Zero(4));
  // Learning from an empty trajectory adds the terminal column and its batch.
  const LearnResult lr = learn_episode(ex, ex.store0, log, 3);
  EXPECT_EQ(lr.online, 1);
  EXPECT_GT(lr.store.size(), ex.store0.size());
}

TEST(Episode, ClosedLoopReachesTargetWithinConstraints) {
  const Experiment& ex = small();
  const EpisodeLog log = run_episode(ex, ex.store0, mpc::TerminalMode::kExpected, 1, 0, 5);
  EXPECT_TRUE(log.reached);
  EXPECT_FALSE(log.abnormal);
  EXPECT_EQ(log.state_violations + log.input_violations, 0);
  EXPECT_EQ(log.states.col(0), ex.config.start);
  EXPECT_TRUE(ex.in_target(log.states.col(log.steps)));
  for (int k = 0; k < log.steps; ++k) {
    EXPECT_FALSE(ex.in_target(log.states.col(k)));
    const Vec next = ex.problem.sys.step(log.states.col(k), log.inputs.col(k), log.disturbances.col(k));
    EXPECT_EQ(next, log.states.col(k + 1));
    EXPECT_TRUE(geometry::contains(ex.problem.W, log.disturbances.col(k), 1e-12));
    EXPECT_EQ(log.stage_costs(k), ex.stage_cost(log.states.col(k), log.inputs.col(k)));
  }
  EXPECT_EQ(log.solves, log.steps + 1);
}

TEST(Episode, SameSeedSameLog) {
  const Experiment& ex = small();
  const auto a = run_episode(ex, ex.store0, mpc::TerminalMode::kExpected, 2, 3, 77);
  const auto b = run_episode(ex, ex.store0, mpc::TerminalMode::kExpected, 2, 3, 77);
  const auto c = run_episode(ex, ex.store0, mpc::TerminalMode::kExpected, 2, 4, 77);
  EXPECT_EQ(save_log(a), save_log(b));
  EXPECT_NE(save_log(a), save_log(c));
}

TEST(Episode, StopsAtTheStepLimit) {
  ExperimentConfig c = small_config();
  c.max_steps = 2;
  const Experiment ex = setup_experiment(c);
  const EpisodeLog log = run_episode(ex, ex.store0, mpc::TerminalMode::kExpected, 1, 0, 5);
  EXPECT_TRUE(log.abnormal);
  EXPECT_FALSE(log.reached);
  EXPECT_EQ(log.steps, 2);
}

TEST(Episode, LogFileRoundTrips) {
  const Experiment& ex = small();
  const EpisodeLog log = run_episode(ex, ex.store0, mpc::TerminalMode::kCertaintyEquivalent, 1, 2, 9);
  const std::string text = save_log(log);
  const EpisodeLog back = load_log(text);
  EXPECT_EQ(save_log(back), text);
  EXPECT_EQ(back.states, log.states);
  EXPECT_EQ(back.mode, mpc::TerminalMode::kCertaintyEquivalent);
  EXPECT_THROW(load_log("step,x1\n"), ConfigError);
}

TEST(MonteCarlo, MeanBelowThePreviousValue) {
  const Experiment& ex = small();
  const MonteCarloSummary mc = monte_carlo_eval(ex, ex.store0, mpc::TerminalMode::kExpected, 1, 30, 21);
  EXPECT_EQ(mc.reached, 30);
  EXPECT_EQ(mc.violations, 0);
  EXPECT_LE(mc.mean, valuefn::value(ex.store0, ex.config.start) + 3 * mc.std_error);
}

TEST(MonteCarlo, IndependentOfThreadCount) {
  const Experiment& ex = small();
  setenv("LMPC_THREADS", "1", 1);
  const auto a = monte_carlo_eval(ex, ex.store0, mpc::TerminalMode::kExpected, 1, 8, 4);
  setenv("LMPC_THREADS", "3", 1);
  const auto b = monte_carlo_eval(ex, ex.store0, mpc::TerminalMode::kExpected, 1, 8, 4);
  unsetenv("LMPC_THREADS");
  for (int r = 0; r < 8; ++r) EXPECT_EQ(save_log(a.logs[r]), save_log(b.logs[r]));
}

TEST(Learn, AppendsInOrderAndDoesNotRaiseTheValue) {
  const Experiment& ex = small();
  const EpisodeLog log = run_episode(ex, ex.store0, mpc::TerminalMode::kExpected, 1, 0, 5);
  const LearnResult lr = learn_episode(ex, ex.store0, log, 5);
  const int l0 = ex.store0.size();
  EXPECT_EQ(lr.store.size(), l0 + lr.online + lr.explored);
  EXPECT_EQ(lr.online, log.steps + 1);
  EXPECT_EQ(lr.store.episode(), 1);
  for (int i = 0; i < lr.online; ++i) {
    EXPECT_EQ(lr.store.provenance()[l0 + i], valuefn::Provenance::kOnline);
    EXPECT_EQ(lr.store.X().col(l0 + i), log.states.col(i));
    EXPECT_EQ(lr.store.J()(l0 + i), log.values(i));
  }
  for (int i = l0 + lr.online; i < lr.store.size(); ++i)
    EXPECT_EQ(lr.store.provenance()[i], valuefn::Provenance::kExploration);
  EXPECT_TRUE(lr.cost_check.ok()) << lr.cost_check.summary();
  EXPECT_LE(lr.start_value_after, lr.start_value_before + 1e-6);
  EXPECT_EQ(static_cast<int>(lr.batches.size()), log.steps + 1);
  for (const auto& b : lr.batches) {
    EXPECT_EQ(b.unsteerable, 0);
    if (b.mode == exploration::BatchMode::kBoundaryLp) EXPECT_LE(b.descent_slope, 1e-8);
  }
}

TEST(Manifest, GitBlobHashes) {
  EXPECT_EQ(git_blob_hash(""), "e69de29bb2d1d6434b8b29ae775ad8c2e48c5391");
  EXPECT_EQ(git_blob_hash("hello\n"), "ce013625030ba8dba906f756967f9e9ca394464a");
}

TEST(Campaign, WritesFilesAndResumesIdentically) {
  const Experiment& ex = small();
  const fs::path a = scratch_dir("full"), b = scratch_dir("resumed");
  CampaignOptions opt = campaign_options(ex.config);
  opt.output_dir = a.string();
  const CampaignResult full = run_campaign(ex, opt);
  ASSERT_EQ(full.episodes.size(), 2u);
  EXPECT_LE(full.episodes[1].value_after, full.episodes[0].value_after + 1e-6);
  EXPECT_LE(full.episodes[0].value_after, full.episodes[0].value_before + 1e-6);

  // Same campaign interrupted after episode 1 and resumed.
  opt.output_dir = b.string();
  opt.episodes = 1;
  run_campaign(ex, opt);
  opt.episodes = 2;
  opt.resume_from = 1;
  const CampaignResult resumed = run_campaign(ex, opt);
  EXPECT_EQ(resumed.first_version, 1);
  for (const char* f : {"expected/store_v0.csv", "expected/store_v1.csv", "expected/store_v2.csv",
                        "expected/summary.csv", "expected/mc_totals.csv",
                        "expected/logs/episode_1.csv", "expected/logs/episode_2.csv"}) {
    ASSERT_TRUE(fs::exists(a / f)) << f;
    EXPECT_EQ(slurp(a / f), slurp(b / f)) << f;
  }
  EXPECT_EQ(build_manifest(a.string(), ex.config, "run"), build_manifest(b.string(), ex.config, "run"));

  const std::string summary = slurp(a / "expected/summary.csv");
  EXPECT_EQ(std::count(summary.begin(), summary.end(), '\n'), 3);
  const std::string totals = slurp(a / "expected/mc_totals.csv");
  EXPECT_EQ(std::count(totals.begin(), totals.end(), '\n'), 1 + 2 * ex.config.mc_runs);
}

TEST(Campaign, ZeroEpisodesIsANoOp) {
  const Experiment& ex = small();
  CampaignOptions opt = campaign_options(ex.config);
  opt.episodes = 0;
  opt.output_dir.clear();
  const CampaignResult r = run_campaign(ex, opt);
  EXPECT_TRUE(r.episodes.empty());
  EXPECT_EQ(r.stores.size(), 1u);
}

TEST(Report, ListsMissingInputs) {
  const fs::path d = scratch_dir("empty");
  EXPECT_EQ(missing_report_inputs(d.string()).size(), report_inputs().size());
  try {
    write_report(d.string());
    FAIL() << "expected an error";
  } catch (const ConfigError& e) {
    for (const auto& f : report_inputs()) EXPECT_NE(std::string(e.what()).find(f), std::string::npos);
  }
}

TEST(Report, TablesHaveOneRowPerEpisodeAndGridPoint) {
  const Experiment& ex = small();
  const fs::path d = scratch_dir("report");
  {
    std::ofstream f(d / "config.json");
    f << to_json(ex.config);
  }
  for (auto mode : {mpc::TerminalMode::kExpected, mpc::TerminalMode::kCertaintyEquivalent}) {
    CampaignOptions opt = campaign_options(ex.config);
    opt.mode = mode;
    opt.output_dir = d.string();
    run_campaign(ex, opt);
  }
  baselines::ValueIterationOptions vo;
  vo.spacing = 5;
  vo.max_iter = 3;
  const auto vi = baselines::value_iteration(ex.problem, ex.dm, vo);
  fs::create_directories(d / "vi");
  baselines::export_table_file(vi, (d / "vi/values.csv").string());

  const auto files = write_report(d.string());
  ASSERT_EQ(files.size(), 4u);
  auto lines = [](const std::string& p) {
    const std::string t = slurp(p);
    return static_cast<int>(std::count(t.begin(), t.end(), '\n'));
  };
  EXPECT_EQ(lines(files[0]), 1 + ex.config.episodes);
  EXPECT_EQ(lines(files[1]), 2 + ex.config.episodes);  // episode 0 included
  EXPECT_EQ(lines(files[2]), 1 + vi.size());
  EXPECT_EQ(lines(files[3]), 1 + vi.size());
  // Grid points outside the learned safe set are marked infeasible.
  const auto learned = baselines::import_table_file(files[2]);
  int outside = 0;
  for (int i = 0; i < learned.size(); ++i) outside += !learned.feasible(i);
  EXPECT_GT(outside, 0);
}

}  // namespace
}  // namespace lmpc::harness
