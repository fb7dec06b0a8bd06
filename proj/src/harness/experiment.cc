#include "lmpc/harness/experiment.h"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "lmpc/harness/stage_cost.h"
#include "lmpc/io/number_format.h"
#include "lmpc/parallel.h"
#include "lmpc/valuefn/diagnostics.h"

namespace lmpc::harness {

namespace {

constexpr double kMembershipTol = 1e-7;

std::string where(const EpisodeLog& log, int k, const Vec& x) {
  std::ostringstream os;
  os << "episode " << log.episode << " run " << log.run << " step " << k << " at x = ["
     << io::format_row(x) << "]";
  return os.str();
}

}  // namespace

init::StageCost Experiment::stage_cost() const {
  return [this](const Vec& x, const Vec& u) { return stage_cost(x, u); };
}

double Experiment::stage_cost(const Vec& x, const Vec& u) const {
  return harness::stage_cost(x, u, problem.O, problem.KO);
}

bool Experiment::in_target(const Vec& x) const {
  return geometry::contains(problem.O, x, config.target_tol);
}

Experiment setup_experiment(const ExperimentConfig& config) {
  validate(config);
  const geometry::Polytope W = config.W.completed();
  disturbance::DisturbanceModel dm =
      config.model_file.empty()
          ? disturbance::build_complete(W, config.num_samples, config.distribution,
                                        config.disturbance_seed, config.num_weight_draws,
                                        config.num_delta_draws)
          : disturbance::load_file(config.model_file);
  return setup_experiment(config, std::move(dm));
}

Experiment setup_experiment(const ExperimentConfig& config, disturbance::DisturbanceModel dm) {
  validate(config);
  Experiment ex;
  ex.config = config;
  ControlProblem& p = ex.problem;
  p.sys.A = config.A;
  p.sys.B = config.B;
  p.X = config.X.completed();
  p.U = config.U.completed();
  p.W = config.W.completed();
  if (dm.dim() != p.sys.nx()) throw ConfigError("disturbance model has the wrong dimension");
  if (dm.weights.size() != dm.size()) throw ConfigError("disturbance model has no weights");
  ex.dm = std::move(dm);

  p.K = init::lqr_gain(p.sys.A, p.sys.B, config.lqr_Q, config.lqr_R);
  p.O = init::build_target_set(p.sys, p.K, p.W, p.X, p.U, config.target_eps);
  p.KO = init::input_image(p.K, p.O);
  ex.X_minus_W = geometry::pontryagin_diff(p.X, p.W);

  ex.plan = init::plan_tube(config.start, p.sys, p.K, p.O, p.X, p.U, p.O, config.max_plan_horizon);
  ex.initial = init::build_initial_data(ex.plan, p.O, ex.stage_cost());
  ex.store0 = valuefn::LearningStore::from_initial(ex.initial, p.W);
  const valuefn::LearningStore& s0 = ex.store0;
  ex.initial_report = init::validate_initial_condition(
      ex.initial, [&](const Vec& x) { return valuefn::value(s0, x); }, ex.dm, p.sys,
      ex.stage_cost(), config.cost_condition_tol);
  if (!ex.initial_report.ok())
    throw InfeasibilityError("initial data fails the cost condition: " + ex.initial_report.summary());
  return ex;
}

Rng closed_loop_rng(uint64_t seed, int episode, int run) {
  return make_rng(seed, {kStreamClosedLoop, static_cast<uint64_t>(episode), static_cast<uint64_t>(run)});
}

EpisodeLog run_episode(const Experiment& ex, const valuefn::LearningStore& store,
                       mpc::TerminalMode mode, int episode, int run, uint64_t seed) {
  const ControlProblem& p = ex.problem;
  EpisodeLog log;
  log.episode = episode;
  log.run = run;
  log.mode = mode;
  Rng rng = closed_loop_rng(seed, episode, run);
  std::vector<Vec> xs, us, ws;
  std::vector<double> costs, values;
  mpc::MpcProblemSpec spec{ex.config.start, &p, &store, &ex.dm, mode};
  Vec x = ex.config.start;
  for (int k = 0;; ++k) {
    spec.x = x;
    const mpc::MpcSolution sol = mpc::solve_mpc(spec);
    ++log.solves;
    if (!sol.optimal())
      throw InfeasibilityError("MPC has no solution in " + where(log, k, x) + " (" +
                               solver::to_string(sol.status) + ")");
    xs.push_back(x);
    us.push_back(sol.u);
    values.push_back(sol.value);
    log.state_violations += !geometry::contains(p.X, x, kMembershipTol);
    log.input_violations += !geometry::contains(p.U, sol.u, kMembershipTol);
    if (ex.in_target(x)) {
      log.reached = true;
      break;
    }
    if (k == ex.config.max_steps) {
      log.abnormal = true;
      break;
    }
    const Vec w = ex.dm.distribution.sample(p.W, rng);
    costs.push_back(ex.stage_cost(x, sol.u));
    ws.push_back(w);
    x = p.sys.step(x, sol.u, w);
  }
  const int n = static_cast<int>(xs.size());
  log.steps = n - 1;
  log.states.resize(p.sys.nx(), n);
  log.inputs.resize(p.sys.nu(), n);
  log.values.resize(n);
  for (int k = 0; k < n; ++k) {
    log.states.col(k) = xs[k];
    log.inputs.col(k) = us[k];
    log.values(k) = values[k];
  }
  log.disturbances.resize(p.sys.nx(), n - 1);
  log.stage_costs.resize(n - 1);
  for (int k = 0; k + 1 < n; ++k) {
    log.disturbances.col(k) = ws[k];
    log.stage_costs(k) = costs[k];
  }
  return log;
}

MonteCarloSummary monte_carlo_eval(const Experiment& ex, const valuefn::LearningStore& store,
                                   mpc::TerminalMode mode, int episode, int runs, uint64_t seed) {
  MonteCarloSummary s;
  s.logs.resize(runs);
  parallel_for(runs, [&](int r) { s.logs[r] = run_episode(ex, store, mode, episode, r, seed); });
  s.totals.resize(runs);
  for (int r = 0; r < runs; ++r) {
    const EpisodeLog& log = s.logs[r];
    s.totals(r) = log.total_cost();
    s.reached += log.reached;
    s.abnormal += log.abnormal;
    s.violations += log.state_violations + log.input_violations;
    s.max_steps = std::max(s.max_steps, log.steps);
  }
  s.mean = s.totals.mean();
  if (runs > 1) {
    const double var = (s.totals.array() - s.mean).square().sum() / (runs - 1);
    s.std_error = std::sqrt(var / runs);
  }
  return s;
}

LearnResult learn_episode(const Experiment& ex, const valuefn::LearningStore& store,
                          const EpisodeLog& log, uint64_t seed) {
  const ControlProblem& p = ex.problem;
  const int n = log.steps + 1;
  std::vector<exploration::ExplorationBatch> batches(n);
  std::vector<BatchRecord> records(n);
  const geometry::Polytope& safe = store.safe_set();
  parallel_for(n, [&](int k) {
    const mpc::MpcProblemSpec spec{log.states.col(k), &p, &store, &ex.dm, log.mode};
    const mpc::MpcSolution sol = mpc::solve_mpc(spec);
    if (!sol.optimal())
      throw InfeasibilityError("MPC has no solution while exploring around " +
                               where(log, k, spec.x));
    Rng rng = make_rng(seed, {kStreamExploration, static_cast<uint64_t>(log.episode),
                              static_cast<uint64_t>(k)});
    batches[k] = exploration::explore_step(spec, sol, ex.X_minus_W, k, rng, ex.config.exploration);
    const exploration::ExplorationBatch& b = batches[k];
    BatchRecord& r = records[k];
    r.step = k;
    r.mode = b.mode;
    r.size = b.size();
    r.dropped = b.dropped;
    r.distance = b.distance;
    if (b.mode == exploration::BatchMode::kBoundaryLp)
      r.descent_slope = mpc::gradient_at_optimum(sol, spec).dot(b.direction);
    for (int i = 0; i < b.size(); ++i)
      for (int m = 0; m < p.W.num_vertices(); ++m)
        r.unsteerable += !geometry::contains(
            safe, p.sys.step(b.states.col(i), b.inputs.col(i), p.W.vertices().col(m)),
            kMembershipTol);
  });

  LearnResult out;
  // Online columns first, then the exploration batches in step order.
  for (int k = 0; k < n; ++k)
    out.additions.append(log.states.col(k), log.inputs.col(k), log.values(k),
                         valuefn::Provenance::kOnline);
  out.online = n;
  for (const auto& b : batches) {
    for (int i = 0; i < b.size(); ++i)
      out.additions.append(b.states.col(i), b.inputs.col(i), b.costs(i),
                           valuefn::Provenance::kExploration);
    out.explored += b.size();
    out.dropped += b.dropped;
  }
  out.batches = std::move(records);
  out.store = valuefn::update(store, out.additions);
  out.cost_check = valuefn::check_cost_condition(out.store, ex.dm, p.sys, ex.stage_cost(),
                                                 ex.config.cost_condition_tol);
  if (!out.cost_check.ok() && log.mode == mpc::TerminalMode::kExpected)
    throw InfeasibilityError("cost condition violated after episode " +
                             std::to_string(log.episode) + ": " + out.cost_check.summary());
  out.start_value_before = valuefn::value(store, ex.config.start);
  out.start_value_after = valuefn::value(out.store, ex.config.start);
  return out;
}

std::string save_log(const EpisodeLog& log) {
  const int nx = static_cast<int>(log.states.rows()), nu = static_cast<int>(log.inputs.rows());
  std::ostringstream os;
  os << "# episode " << log.episode << " run " << log.run << " mode " << mpc::to_string(log.mode)
     << " steps " << log.steps << " reached " << log.reached << " abnormal " << log.abnormal
     << " state_violations " << log.state_violations << " input_violations "
     << log.input_violations << " solves " << log.solves << " nx " << nx << " nu " << nu << '\n';
  os << "step";
  for (int i = 0; i < nx; ++i) os << ",x" << i + 1;
  for (int i = 0; i < nu; ++i) os << ",u" << i + 1;
  for (int i = 0; i < nx; ++i) os << ",w" << i + 1;
  os << ",stage_cost,value\n";
  for (int k = 0; k <= log.steps; ++k) {
    os << k;
    for (int i = 0; i < nx; ++i) os << ',' << io::format_number(log.states(i, k));
    for (int i = 0; i < nu; ++i) os << ',' << io::format_number(log.inputs(i, k));
    const bool last = k == log.steps;
    for (int i = 0; i < nx; ++i) os << ',' << (last ? "" : io::format_number(log.disturbances(i, k)));
    os << ',' << (last ? "" : io::format_number(log.stage_costs(k)));
    os << ',' << io::format_number(log.values(k)) << '\n';
  }
  return os.str();
}

EpisodeLog load_log(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("# ", 0) != 0) throw ConfigError("episode log: missing metadata line");
  std::map<std::string, std::string> meta;
  {
    std::istringstream ms(line.substr(2));
    std::string key, val;
    while (ms >> key >> val) meta[key] = val;
  }
  EpisodeLog log;
  int nx = 0, nu = 0;
  try {
    log.episode = std::stoi(meta.at("episode"));
    log.run = std::stoi(meta.at("run"));
    log.mode = mpc::parse_terminal_mode(meta.at("mode"));
    log.steps = std::stoi(meta.at("steps"));
    log.reached = meta.at("reached") == "1";
    log.abnormal = meta.at("abnormal") == "1";
    log.state_violations = std::stoi(meta.at("state_violations"));
    log.input_violations = std::stoi(meta.at("input_violations"));
    log.solves = std::stoi(meta.at("solves"));
    nx = std::stoi(meta.at("nx"));
    nu = std::stoi(meta.at("nu"));
  } catch (const std::exception& e) {
    throw ConfigError(std::string("episode log: bad metadata: ") + e.what());
  }
  std::getline(in, line);  // header
  const int n = log.steps + 1;
  log.states.resize(nx, n);
  log.inputs.resize(nu, n);
  log.disturbances.resize(nx, n - 1);
  log.stage_costs.resize(n - 1);
  log.values.resize(n);
  for (int k = 0; k < n; ++k) {
    if (!std::getline(in, line)) throw ConfigError("episode log: truncated");
    const auto f = io::split(line, ',');
    if (static_cast<int>(f.size()) != 1 + 2 * nx + nu + 2) throw ConfigError("episode log: bad row");
    int c = 1;
    try {
      for (int i = 0; i < nx; ++i) log.states(i, k) = io::parse_number(f[c++]);
      for (int i = 0; i < nu; ++i) log.inputs(i, k) = io::parse_number(f[c++]);
      if (k < n - 1) {
        for (int i = 0; i < nx; ++i) log.disturbances(i, k) = io::parse_number(f[c++]);
        log.stage_costs(k) = io::parse_number(f[c++]);
      } else {
        c += nx + 1;
      }
      log.values(k) = io::parse_number(f[c]);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("episode log: ") + e.what());
    }
  }
  return log;
}

void save_log_file(const EpisodeLog& log, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot write " + path);
  f << save_log(log);
}

EpisodeLog load_log_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return load_log(ss.str());
}

}  // namespace lmpc::harness
