#include "lmpc/disturbance/disturbance_model.h"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lmpc/parallel.h"
#include "lmpc/solver/convex_program.h"

namespace lmpc::disturbance {

using geometry::Polytope;
using nlohmann::json;

namespace {

constexpr int kMaxRejections = 1000000;
constexpr double kSupportThreshold = 1e-9;

struct BoundingBox {
  Vec lo, hi;
};

BoundingBox bounding_box(const Polytope& W) {
  const Mat& V = W.vertices();
  return {V.rowwise().minCoeff(), V.rowwise().maxCoeff()};
}

}  // namespace

DisturbanceDistribution DisturbanceDistribution::truncated_gaussian(const Vec& mean,
                                                                    const Mat& covariance) {
  if (covariance.rows() != mean.size() || covariance.cols() != mean.size())
    throw ConfigError("truncated_gaussian: covariance does not match the mean");
  Eigen::LLT<Mat> llt(covariance);
  if (llt.info() != Eigen::Success)
    throw ConfigError("truncated_gaussian: covariance is not positive definite");
  DisturbanceDistribution d;
  d.kind = Kind::kTruncatedGaussian;
  d.mean = mean;
  d.covariance = covariance;
  return d;
}

Vec DisturbanceDistribution::sample(const Polytope& W, Rng& rng) const {
  const int n = W.dim();
  if (kind == Kind::kUniform) {
    const BoundingBox box = bounding_box(W);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    Vec w(n);
    for (int t = 0; t < kMaxRejections; ++t) {
      for (int i = 0; i < n; ++i) w(i) = box.lo(i) + (box.hi(i) - box.lo(i)) * u01(rng);
      if (geometry::contains(W, w, 0.0)) return w;
    }
  } else {
    const Mat L = covariance.llt().matrixL();
    std::normal_distribution<double> g(0.0, 1.0);
    Vec z(n);
    for (int t = 0; t < kMaxRejections; ++t) {
      for (int i = 0; i < n; ++i) z(i) = g(rng);
      Vec w = mean + L * z;
      if (geometry::contains(W, w, 0.0)) return w;
    }
  }
  throw InfeasibilityError("disturbance sampling: rejection cap reached");
}

std::string to_string(DisturbanceDistribution::Kind kind) {
  return kind == DisturbanceDistribution::Kind::kUniform ? "uniform" : "truncated_gaussian";
}

DisturbanceDistribution::Kind parse_distribution_kind(const std::string& name) {
  if (name == "uniform") return DisturbanceDistribution::Kind::kUniform;
  if (name == "truncated_gaussian") return DisturbanceDistribution::Kind::kTruncatedGaussian;
  throw ConfigError("unknown disturbance distribution '" + name + "'");
}

DisturbanceModel build(const Polytope& W, int M, const DisturbanceDistribution& distribution,
                       uint64_t seed) {
  if (W.is_empty()) throw ConfigError("disturbance set is empty");
  DisturbanceModel model;
  model.W = W.completed();
  model.seed = seed;
  model.distribution = distribution;
  const Mat& V = model.W.vertices();
  const int nv = static_cast<int>(V.cols());
  if (M < nv)
    throw ConfigError("disturbance model: M=" + std::to_string(M) + " is below the " +
                      std::to_string(nv) + " vertices of W");
  if (distribution.kind == DisturbanceDistribution::Kind::kTruncatedGaussian &&
      distribution.mean.size() != W.dim())
    throw ConfigError("disturbance model: Gaussian mean has the wrong dimension");
  model.samples.resize(W.dim(), M);
  model.samples.leftCols(nv) = V;
  Rng rng = make_rng(seed, {kStreamSamples});
  for (int m = nv; m < M; ++m) model.samples.col(m) = distribution.sample(model.W, rng);
  return model;
}

Vec mu(const DisturbanceModel& model, const Vec& w) {
  const int M = model.size();
  const int n = model.dim();
  if (w.size() != n) throw std::invalid_argument("mu: dimension mismatch");
  solver::ConvexProgram lp(M);
  lp.set_linear(model.samples.colwise().squaredNorm().transpose());
  lp.set_bounds(Vec::Zero(M), Vec::Constant(M, std::numeric_limits<double>::infinity()));
  Mat Aeq(n + 1, M);
  Aeq.topRows(n) = model.samples;
  Aeq.row(n).setOnes();
  Vec beq(n + 1);
  beq << w, 1.0;
  lp.add_equality("combination", Aeq, beq);
  solver::SolverOptions opt;
  opt.backend = solver::Backend::kSimplex;
  const solver::SolveResult r = solver::solve(lp, opt);
  if (r.status == solver::SolveStatus::kInfeasible)
    throw InfeasibilityError("mu: point is outside the hull of the samples");
  if (!r.optimal()) throw SolverError("mu: " + r.diagnostics);
  Vec out = r.primal.cwiseMax(0.0);
  return out / out.sum();
}

Vec estimate_weights(const DisturbanceModel& model, int num_draws, bool allow_small) {
  const int M = model.size();
  if (num_draws <= 0 || (!allow_small && num_draws < 10 * M))
    throw ConfigError("estimate_weights: need at least 10 draws per sample");
  // Per-draw streams keep the result independent of the thread count.
  std::vector<Vec> coeffs(num_draws);
  parallel_for(num_draws, [&](int i) {
    Rng rng = make_rng(model.seed, {kStreamWeights, static_cast<uint64_t>(i)});
    coeffs[i] = mu(model, model.distribution.sample(model.W, rng));
  });
  Vec p = Vec::Zero(M);
  for (const Vec& c : coeffs) p += c;
  p /= p.sum();
  return p;
}

double estimate_delta(const DisturbanceModel& model, int num_draws) {
  std::vector<double> worst(num_draws, 0.0);
  parallel_for(num_draws, [&](int i) {
    Rng rng = make_rng(model.seed, {kStreamDelta, static_cast<uint64_t>(i)});
    const Vec w = model.distribution.sample(model.W, rng);
    const Vec c = mu(model, w);
    for (int m = 0; m < model.size(); ++m)
      if (c(m) > kSupportThreshold)
        worst[i] = std::max(worst[i], (model.samples.col(m) - w).norm());
  });
  double delta = 0.0;
  for (double d : worst) delta = std::max(delta, d);
  return delta;
}

DisturbanceModel build_complete(const Polytope& W, int M,
                                const DisturbanceDistribution& distribution, uint64_t seed,
                                int num_weight_draws, int num_delta_draws) {
  DisturbanceModel model = build(W, M, distribution, seed);
  model.weights = estimate_weights(model, num_weight_draws);
  model.delta = estimate_delta(model, num_delta_draws);
  return model;
}

namespace {

json matrix_to_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (int j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
    rows.push_back(r);
  }
  return rows;
}

Mat matrix_from_json(const json& j, int cols_if_empty = 0) {
  const int rows = static_cast<int>(j.size());
  const int cols = rows ? static_cast<int>(j[0].size()) : cols_if_empty;
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(j[i].size()) != cols) throw ConfigError("ragged matrix in model file");
    for (int k = 0; k < cols; ++k) m(i, k) = j[i][k].get<double>();
  }
  return m;
}

json vector_to_json(const Vec& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

Vec vector_from_json(const json& j) {
  const auto v = j.get<std::vector<double>>();
  return Eigen::Map<const Vec>(v.data(), static_cast<Eigen::Index>(v.size()));
}

}  // namespace

std::string save(const DisturbanceModel& model) {
  json j;
  j["format"] = "lmpc-disturbance-model";
  j["version"] = 1;
  j["W"] = geometry::serialize(model.W);
  j["seed"] = model.seed;
  j["distribution"] = {{"kind", to_string(model.distribution.kind)}};
  if (model.distribution.kind == DisturbanceDistribution::Kind::kTruncatedGaussian) {
    j["distribution"]["mean"] = vector_to_json(model.distribution.mean);
    j["distribution"]["covariance"] = matrix_to_json(model.distribution.covariance);
  }
  // One sample per row.
  j["samples"] = matrix_to_json(model.samples.transpose());
  j["weights"] = vector_to_json(model.weights);
  j["delta"] = model.delta;
  return j.dump(1);
}

DisturbanceModel load(const std::string& text) {
  DisturbanceModel model;
  try {
    const json j = json::parse(text);
    if (j.value("format", "") != "lmpc-disturbance-model")
      throw ConfigError("not a disturbance model file");
    model.W = geometry::parse_polytope(j.at("W").get<std::string>()).completed();
    model.seed = j.at("seed").get<uint64_t>();
    const json& d = j.at("distribution");
    model.distribution.kind = parse_distribution_kind(d.at("kind").get<std::string>());
    if (model.distribution.kind == DisturbanceDistribution::Kind::kTruncatedGaussian) {
      model.distribution.mean = vector_from_json(d.at("mean"));
      model.distribution.covariance = matrix_from_json(d.at("covariance"));
    }
    model.samples = matrix_from_json(j.at("samples"), model.W.dim()).transpose();
    model.weights = vector_from_json(j.at("weights"));
    model.delta = j.at("delta").get<double>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed disturbance model: ") + e.what());
  }
  if (model.samples.rows() != model.W.dim())
    throw ConfigError("disturbance model: sample dimension does not match W");
  if (model.weights.size() != 0 && model.weights.size() != model.samples.cols())
    throw ConfigError("disturbance model: weight count does not match samples");
  return model;
}

void save_file(const DisturbanceModel& model, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot write " + path);
  f << save(model) << '\n';
}

DisturbanceModel load_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return load(ss.str());
}

}  // namespace lmpc::disturbance
