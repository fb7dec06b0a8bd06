#pragma once

#include <cstdint>
#include <string>

#include "lmpc/common.h"
#include "lmpc/geometry/polytope.h"
#include "lmpc/random.h"

namespace lmpc::disturbance {

/// Probability law of the disturbance, always restricted to the support set W.
struct DisturbanceDistribution {
  enum class Kind { kUniform, kTruncatedGaussian };
  Kind kind = Kind::kUniform;
  Vec mean;        // Gaussian only
  Mat covariance;  // Gaussian only

  static DisturbanceDistribution uniform() { return {}; }
  static DisturbanceDistribution truncated_gaussian(const Vec& mean, const Mat& covariance);

  /// One draw inside W, by rejection. Throws InfeasibilityError if the
  /// acceptance rate is so low that 10^6 proposals all miss.
  Vec sample(const geometry::Polytope& W, Rng& rng) const;
};

std::string to_string(DisturbanceDistribution::Kind kind);
DisturbanceDistribution::Kind parse_distribution_kind(const std::string& name);

/// Finite stand-in for the disturbance: M points of W (its vertices first),
/// expectation weights and the spread bound.
struct DisturbanceModel {
  geometry::Polytope W;  // both representations
  Mat samples;           // dim x M
  Vec weights;           // M, empty until estimated
  double delta = 0.0;    // 0 until estimated
  uint64_t seed = 0;
  DisturbanceDistribution distribution;

  int dim() const { return static_cast<int>(samples.rows()); }
  int size() const { return static_cast<int>(samples.cols()); }
  int num_vertices() const { return W.num_vertices(); }
};

/// Vertices of W followed by M - (#vertices) draws from the distribution.
DisturbanceModel build(const geometry::Polytope& W, int M,
                       const DisturbanceDistribution& distribution, uint64_t seed);

/// Convex coefficients expressing w in terms of the samples, choosing the
/// combination with the least sum of |w_m|^2 mu_m. Throws InfeasibilityError
/// when w is not in the hull of the samples.
Vec mu(const DisturbanceModel& model, const Vec& w);

/// Monte-Carlo average of mu over num_draws draws of the distribution.
/// Requires num_draws >= 10 M unless allow_small is set.
Vec estimate_weights(const DisturbanceModel& model, int num_draws, bool allow_small = false);

/// Largest distance from a validation draw to any sample in the support of
/// its mu, over num_draws draws.
double estimate_delta(const DisturbanceModel& model, int num_draws);

/// build + estimate_weights + estimate_delta.
DisturbanceModel build_complete(const geometry::Polytope& W, int M,
                                const DisturbanceDistribution& distribution, uint64_t seed,
                                int num_weight_draws, int num_delta_draws);

/// JSON persistence. Numbers round-trip exactly.
std::string save(const DisturbanceModel& model);
DisturbanceModel load(const std::string& text);
void save_file(const DisturbanceModel& model, const std::string& path);
DisturbanceModel load_file(const std::string& path);

}  // namespace lmpc::disturbance
