#pragma once

#include <memory>
#include <string>
#include <vector>

#include "lmpc/common.h"
#include "lmpc/geometry/polytope.h"
#include "lmpc/init/initialization.h"
#include "lmpc/valuefn/lower_hull.h"

namespace lmpc::valuefn {

struct EpisodeAdditions;

enum class Provenance { kInitial, kOnline, kExploration };
std::string to_string(Provenance p);
Provenance parse_provenance(const std::string& s);

/// Sampled states, inputs and costs collected so far, with the derived safe
/// set and its tightening by W. Immutable; update() returns a new version.
class LearningStore {
 public:
  LearningStore() = default;

  /// Version 0 from the initial data.
  static LearningStore from_initial(const init::InitialData& data, const geometry::Polytope& W);
  /// Rebuilds caches for an explicit column set (used by loading and tests).
  static LearningStore from_columns(int episode, const Mat& X, const Mat& U, const Vec& J,
                                    std::vector<Provenance> provenance, std::vector<int> origin,
                                    const geometry::Polytope& W);

  int episode() const { return episode_; }
  int size() const { return static_cast<int>(J_.size()); }
  int nx() const { return static_cast<int>(X_.rows()); }
  int nu() const { return static_cast<int>(U_.rows()); }
  const Mat& X() const { return X_; }
  const Mat& U() const { return U_; }
  const Vec& J() const { return J_; }
  const std::vector<Provenance>& provenance() const { return provenance_; }
  const std::vector<int>& origin() const { return origin_; }

  /// Halfspace and vertex form of the hull of the columns.
  const geometry::Polytope& safe_set() const { return safe_set_; }
  /// Safe set shrunk by W.
  const geometry::Polytope& tightened() const { return tightened_; }
  const geometry::Polytope& disturbance_set() const { return W_; }
  /// True when the latest facet enumeration failed and older facets are kept.
  bool degenerate() const { return degenerate_; }
  /// Closed-form evaluator, only for two-dimensional states.
  const PlanarLowerHull* lower_hull() const { return hull_.get(); }

 private:
  void rebuild_caches(const LearningStore* previous);

  int episode_ = 0;
  Mat X_, U_;
  Vec J_;
  std::vector<Provenance> provenance_;
  std::vector<int> origin_;
  geometry::Polytope W_;
  geometry::Polytope safe_set_;
  geometry::Polytope tightened_;
  bool degenerate_ = false;
  std::shared_ptr<const PlanarLowerHull> hull_;

  friend LearningStore update(const LearningStore&, const EpisodeAdditions&);
};

/// Columns gathered in one episode, in storage order.
struct EpisodeAdditions {
  Mat X, U;
  Vec J;
  std::vector<Provenance> provenance;

  void append(const Vec& x, const Vec& u, double j, Provenance p);
  int size() const { return static_cast<int>(J.size()); }
};

/// Next version: old columns untouched, new ones appended, caches rebuilt.
/// Throws InfeasibilityError if an old vertex of the safe set is lost.
LearningStore update(const LearningStore& store, const EpisodeAdditions& additions);

struct ValueEvaluation {
  bool feasible = false;
  double value = 0.0;
  Vec lambda;       // convex coefficients over the columns
  Vec subgradient;  // multiplier of X lambda = x
};

/// Hull-interpolated value by LP. Infeasible means x is outside the safe set.
ValueEvaluation evaluate(const LearningStore& store, const Vec& x);
/// Value only; closed form when available, LP otherwise. +inf outside.
double value(const LearningStore& store, const Vec& x);
/// Inputs interpolated with the optimal coefficients. Throws
/// InfeasibilityError outside the safe set.
Vec safe_policy(const LearningStore& store, const Vec& x);

/// Halfspace form of the safe set minus W. Throws ConfigError if empty.
geometry::Polytope tightened_terminal(const LearningStore& store, const geometry::Polytope& W);

/// Plain-text column file: header line, then one record per column
/// "x..., u..., J, provenance, origin".
std::string save_columns(const LearningStore& store);
LearningStore load_columns(const std::string& text, const geometry::Polytope& W);
void save_columns_file(const LearningStore& store, const std::string& path);
LearningStore load_columns_file(const std::string& path, const geometry::Polytope& W);

}  // namespace lmpc::valuefn
