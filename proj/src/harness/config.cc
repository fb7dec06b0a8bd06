#include "lmpc/harness/config.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lmpc/io/number_format.h"

namespace lmpc::harness {

using nlohmann::json;

namespace {

json matrix_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (int j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
    rows.push_back(r);
  }
  return rows;
}

Mat matrix_from(const json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) throw ConfigError(what + ": expected a non-empty matrix");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j[0].size());
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols)
      throw ConfigError(what + ": ragged matrix");
    for (int k = 0; k < cols; ++k) m(i, k) = j[i][k].get<double>();
  }
  return m;
}

json vector_json(const Vec& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

Vec vector_from(const json& j, const std::string& what) {
  if (!j.is_array()) throw ConfigError(what + ": expected an array");
  const auto v = j.get<std::vector<double>>();
  return Eigen::Map<const Vec>(v.data(), static_cast<Eigen::Index>(v.size()));
}

json set_json(const geometry::Polytope& P) {
  if (P.has_halfspaces()) return {{"halfspaces", {{"A", matrix_json(P.A())}, {"b", vector_json(P.b())}}}};
  return {{"vertices", matrix_json(P.vertices().transpose())}};
}

geometry::Polytope set_from(const json& j, const std::string& what) {
  if (!j.is_object() || j.size() != 1) throw ConfigError(what + ": expected one set description");
  if (j.contains("box")) {
    const Vec lo = vector_from(j["box"].at("lo"), what + ".box.lo");
    const Vec hi = vector_from(j["box"].at("hi"), what + ".box.hi");
    if (lo.size() != hi.size() || (hi - lo).minCoeff() < 0) throw ConfigError(what + ": bad box");
    return geometry::Polytope::box(lo, hi);
  }
  if (j.contains("halfspaces")) {
    const Mat A = matrix_from(j["halfspaces"].at("A"), what + ".halfspaces.A");
    const Vec b = vector_from(j["halfspaces"].at("b"), what + ".halfspaces.b");
    if (A.rows() != b.size()) throw ConfigError(what + ": A and b disagree");
    return geometry::Polytope::from_halfspaces(A, b);
  }
  if (j.contains("vertices"))
    return geometry::Polytope::from_vertices(matrix_from(j["vertices"], what + ".vertices").transpose());
  throw ConfigError(what + ": unknown set description");
}

template <typename T>
void read(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j[key].get<T>();
}

// Sets "a.b.c" in j to the parsed value.
void apply_override(json& j, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) throw ConfigError("override needs key=value: " + assignment);
  const std::string key = assignment.substr(0, eq), text = assignment.substr(eq + 1);
  json value;
  try {
    value = json::parse(text);
  } catch (const json::exception&) {
    value = text;
  }
  json* node = &j;
  std::stringstream path(key);
  std::string part;
  std::vector<std::string> parts;
  while (std::getline(path, part, '.')) parts.push_back(part);
  for (size_t i = 0; i + 1 < parts.size(); ++i) {
    json& next = (*node)[parts[i]];
    if (!next.is_object()) next = json::object();
    node = &next;
  }
  (*node)[parts.back()] = value;
}

ExperimentConfig from_json_value(const json& j) {
  ExperimentConfig c = default_config();
  const json& sys = j.value("system", json::object());
  if (sys.contains("A")) c.A = matrix_from(sys["A"], "system.A");
  if (sys.contains("B")) c.B = matrix_from(sys["B"], "system.B");
  const json& sets = j.value("sets", json::object());
  if (sets.contains("X")) c.X = set_from(sets["X"], "sets.X");
  if (sets.contains("U")) c.U = set_from(sets["U"], "sets.U");
  if (sets.contains("W")) c.W = set_from(sets["W"], "sets.W");
  if (j.contains("start")) c.start = vector_from(j["start"], "start");

  const json& d = j.value("disturbance", json::object());
  if (d.contains("distribution")) {
    const json& dist = d["distribution"];
    const auto kind = disturbance::parse_distribution_kind(dist.value("kind", "uniform"));
    if (kind == disturbance::DisturbanceDistribution::Kind::kTruncatedGaussian)
      c.distribution = disturbance::DisturbanceDistribution::truncated_gaussian(
          vector_from(dist.at("mean"), "distribution.mean"),
          matrix_from(dist.at("covariance"), "distribution.covariance"));
    else
      c.distribution = disturbance::DisturbanceDistribution::uniform();
  }
  read(d, "samples", c.num_samples);
  read(d, "weight_draws", c.num_weight_draws);
  read(d, "delta_draws", c.num_delta_draws);
  read(d, "seed", c.disturbance_seed);
  read(d, "model_file", c.model_file);

  const json& t = j.value("terminal", json::object());
  if (t.contains("lqr_Q")) c.lqr_Q = matrix_from(t["lqr_Q"], "terminal.lqr_Q");
  if (t.contains("lqr_R")) c.lqr_R = matrix_from(t["lqr_R"], "terminal.lqr_R");
  read(t, "target_eps", c.target_eps);
  read(t, "max_plan_horizon", c.max_plan_horizon);

  read(j, "seed", c.seed);
  read(j, "episodes", c.episodes);
  read(j, "max_steps", c.max_steps);
  read(j, "mc_runs", c.mc_runs);
  read(j, "learning_run", c.learning_run);
  if (j.contains("mode")) c.mode = mpc::parse_terminal_mode(j["mode"].get<std::string>());
  read(j, "target_tol", c.target_tol);
  read(j, "cost_condition_tol", c.cost_condition_tol);
  read(j, "invariance_points", c.invariance_points);
  read(j, "fixed_point_points", c.fixed_point_points);
  read(j, "output_dir", c.output_dir);

  const json& e = j.value("exploration", json::object());
  read(e, "nu_threshold", c.exploration.nu_threshold);
  read(e, "sample_scale", c.exploration.sample_scale);
  read(e, "max_rejections", c.exploration.max_rejections);

  const json& v = j.value("vi", json::object());
  read(v, "spacing", c.vi_spacing);
  read(v, "tol", c.vi_tol);
  read(v, "max_iter", c.vi_max_iter);
  return c;
}

}  // namespace

ExperimentConfig default_config() {
  ExperimentConfig c;
  c.A.resize(2, 2);
  c.A << 1, 1, 0, 1;
  c.B.resize(2, 1);
  c.B << 0.5, 1;
  Vec lo(2), hi(2);
  lo << -10, -40;
  hi << 40, 10;
  c.X = geometry::Polytope::box(lo, hi);
  c.U = geometry::Polytope::box(Vec::Constant(1, -5), Vec::Constant(1, 5));
  c.W = geometry::Polytope::box(Vec::Constant(2, -1.0 / 3), Vec::Constant(2, 1.0 / 3));
  c.start.resize(2);
  c.start << 30, 5;
  c.lqr_Q = Mat::Identity(2, 2);
  c.lqr_R = 0.01 * Mat::Identity(1, 1);
  return c;
}

std::string to_json(const ExperimentConfig& c) {
  json j;
  j["system"] = {{"A", matrix_json(c.A)}, {"B", matrix_json(c.B)}};
  j["sets"] = {{"X", set_json(c.X)}, {"U", set_json(c.U)}, {"W", set_json(c.W)}};
  j["start"] = vector_json(c.start);
  json dist = {{"kind", disturbance::to_string(c.distribution.kind)}};
  if (c.distribution.kind == disturbance::DisturbanceDistribution::Kind::kTruncatedGaussian) {
    dist["mean"] = vector_json(c.distribution.mean);
    dist["covariance"] = matrix_json(c.distribution.covariance);
  }
  j["disturbance"] = {{"distribution", dist},
                      {"samples", c.num_samples},
                      {"weight_draws", c.num_weight_draws},
                      {"delta_draws", c.num_delta_draws},
                      {"seed", c.disturbance_seed},
                      {"model_file", c.model_file}};
  j["terminal"] = {{"lqr_Q", matrix_json(c.lqr_Q)},
                   {"lqr_R", matrix_json(c.lqr_R)},
                   {"target_eps", c.target_eps},
                   {"max_plan_horizon", c.max_plan_horizon}};
  j["seed"] = c.seed;
  j["episodes"] = c.episodes;
  j["max_steps"] = c.max_steps;
  j["mc_runs"] = c.mc_runs;
  j["learning_run"] = c.learning_run;
  j["mode"] = mpc::to_string(c.mode);
  j["target_tol"] = c.target_tol;
  j["cost_condition_tol"] = c.cost_condition_tol;
  j["invariance_points"] = c.invariance_points;
  j["fixed_point_points"] = c.fixed_point_points;
  j["exploration"] = {{"nu_threshold", c.exploration.nu_threshold},
                      {"sample_scale", c.exploration.sample_scale},
                      {"max_rejections", c.exploration.max_rejections}};
  j["vi"] = {{"spacing", c.vi_spacing}, {"tol", c.vi_tol}, {"max_iter", c.vi_max_iter}};
  j["output_dir"] = c.output_dir;
  return j.dump(2);
}

namespace {

ExperimentConfig parse_unchecked(const std::string& text, const std::vector<std::string>& overrides) {
  ExperimentConfig c;
  try {
    json j = json::parse(text);
    if (!j.is_object()) throw ConfigError("config: expected a JSON object");
    for (const auto& o : overrides) apply_override(j, o);
    c = from_json_value(j);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return c;
}

}  // namespace

ExperimentConfig parse_config(const std::string& text, const std::vector<std::string>& overrides) {
  ExperimentConfig c = parse_unchecked(text, overrides);
  validate(c);
  return c;
}

ExperimentConfig from_json(const std::string& text) { return parse_config(text); }

ExperimentConfig load_config(const std::string& path, const std::vector<std::string>& overrides) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read config " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  ExperimentConfig c = parse_unchecked(ss.str(), overrides);
  // Relative model paths are taken relative to the config file.
  if (!c.model_file.empty() && std::filesystem::path(c.model_file).is_relative()) {
    const auto resolved = std::filesystem::path(path).parent_path() / c.model_file;
    if (std::filesystem::exists(resolved)) c.model_file = resolved.string();
  }
  validate(c);
  return c;
}

void validate(const ExperimentConfig& c) {
  const int nx = static_cast<int>(c.A.rows());
  if (nx == 0 || c.A.cols() != nx) throw ConfigError("system.A must be square");
  if (c.B.rows() != nx || c.B.cols() == 0) throw ConfigError("system.B must have as many rows as A");
  const int nu = static_cast<int>(c.B.cols());
  if (c.X.dim() != nx) throw ConfigError("sets.X has the wrong dimension");
  if (c.W.dim() != nx) throw ConfigError("sets.W has the wrong dimension");
  if (c.U.dim() != nu) throw ConfigError("sets.U has the wrong dimension");
  for (const auto* P : {&c.X, &c.U, &c.W})
    if (P->is_empty() || P->completed().num_vertices() == 0)
      throw ConfigError("sets must be bounded and non-empty");
  if (c.start.size() != nx) throw ConfigError("start has the wrong dimension");
  if (!geometry::contains(c.X, c.start, 1e-9))
    throw ConfigError("start " + io::format_row(c.start) + " is not in the state constraint set X");
  if (c.lqr_Q.rows() != nx || c.lqr_Q.cols() != nx) throw ConfigError("terminal.lqr_Q must be nx x nx");
  if (c.lqr_R.rows() != nu || c.lqr_R.cols() != nu) throw ConfigError("terminal.lqr_R must be nu x nu");
  if (c.distribution.kind == disturbance::DisturbanceDistribution::Kind::kTruncatedGaussian &&
      c.distribution.mean.size() != nx)
    throw ConfigError("distribution.mean has the wrong dimension");
  if (c.num_samples <= 0 || c.num_weight_draws <= 0 || c.num_delta_draws <= 0)
    throw ConfigError("disturbance counts must be positive");
  if (c.episodes < 0) throw ConfigError("episodes must be >= 0");
  if (c.max_steps <= 0) throw ConfigError("max_steps must be positive");
  if (c.mc_runs <= 0) throw ConfigError("mc_runs must be positive");
  if (c.learning_run < 0 || c.learning_run >= c.mc_runs)
    throw ConfigError("learning_run must index one of the Monte-Carlo runs");
  if (!(c.target_eps > 0)) throw ConfigError("terminal.target_eps must be positive");
  if (!(c.vi_spacing > 0) || c.vi_max_iter <= 0) throw ConfigError("vi settings must be positive");
  if (!c.model_file.empty() && !std::filesystem::exists(c.model_file))
    throw ConfigError("disturbance.model_file not found: " + c.model_file);
}

}  // namespace lmpc::harness
