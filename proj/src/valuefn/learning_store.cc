#include "lmpc/valuefn/learning_store.h"

#include <fstream>
#include <limits>
#include <sstream>

#include "lmpc/io/number_format.h"
#include "lmpc/solver/convex_program.h"

namespace lmpc::valuefn {

using geometry::Polytope;

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::kInitial: return "initial";
    case Provenance::kOnline: return "online";
    case Provenance::kExploration: return "exploration";
  }
  return "?";
}

Provenance parse_provenance(const std::string& s) {
  if (s == "initial") return Provenance::kInitial;
  if (s == "online") return Provenance::kOnline;
  if (s == "exploration") return Provenance::kExploration;
  throw ConfigError("unknown provenance '" + s + "'");
}

LearningStore LearningStore::from_initial(const init::InitialData& data, const Polytope& W) {
  return from_columns(0, data.X, data.U, data.J,
                      std::vector<Provenance>(data.size(), Provenance::kInitial),
                      std::vector<int>(data.size(), 0), W);
}

LearningStore LearningStore::from_columns(int episode, const Mat& X, const Mat& U, const Vec& J,
                                          std::vector<Provenance> provenance,
                                          std::vector<int> origin, const Polytope& W) {
  const auto l = J.size();
  if (X.cols() != l || U.cols() != l || static_cast<Eigen::Index>(provenance.size()) != l ||
      static_cast<Eigen::Index>(origin.size()) != l)
    throw std::invalid_argument("LearningStore: column counts differ");
  if (l > 0 && J.minCoeff() < 0) throw std::invalid_argument("LearningStore: negative cost");
  LearningStore s;
  s.episode_ = episode;
  s.X_ = X;
  s.U_ = U;
  s.J_ = J;
  s.provenance_ = std::move(provenance);
  s.origin_ = std::move(origin);
  s.W_ = W.completed();
  s.rebuild_caches(nullptr);
  return s;
}

void LearningStore::rebuild_caches(const LearningStore* previous) {
  degenerate_ = false;
  try {
    if (nx() > 3) {
      safe_set_ = Polytope::from_vertices(X_);
      tightened_ = Polytope();
    } else {
      const Polytope hull = geometry::facet_enumeration(X_);
      safe_set_ = Polytope::from_both(hull.A(), hull.b(), Polytope::from_vertices(X_).vertices());
      tightened_ = geometry::pontryagin_diff(safe_set_, W_);
    }
    if (nx() == 2) hull_ = std::make_shared<const PlanarLowerHull>(X_, J_);
  } catch (const DegenerateHullError&) {
    degenerate_ = true;
    if (previous) {
      safe_set_ = previous->safe_set_;
      tightened_ = previous->tightened_;
      hull_ = previous->hull_;
    } else {
      safe_set_ = Polytope::from_vertices(X_);
      tightened_ = Polytope::empty(nx());
      hull_.reset();
    }
  }
}

void EpisodeAdditions::append(const Vec& x, const Vec& u, double j, Provenance p) {
  const auto n = J.size();
  if (n == 0) {
    X.resize(x.size(), 0);
    U.resize(u.size(), 0);
  }
  X.conservativeResize(x.size(), n + 1);
  U.conservativeResize(u.size(), n + 1);
  J.conservativeResize(n + 1);
  X.col(n) = x;
  U.col(n) = u;
  J(n) = j;
  provenance.push_back(p);
}

LearningStore update(const LearningStore& store, const EpisodeAdditions& add) {
  LearningStore next = store;
  next.episode_ = store.episode_ + 1;
  const int l = store.size(), a = add.size();
  if (a > 0) {
    if (add.X.rows() != store.nx() || add.U.rows() != store.nu())
      throw std::invalid_argument("update: dimension mismatch");
    if (add.J.minCoeff() < 0) throw std::invalid_argument("update: negative cost");
    next.X_.conservativeResize(Eigen::NoChange, l + a);
    next.U_.conservativeResize(Eigen::NoChange, l + a);
    next.J_.conservativeResize(l + a);
    next.X_.rightCols(a) = add.X;
    next.U_.rightCols(a) = add.U;
    next.J_.tail(a) = add.J;
    next.provenance_.insert(next.provenance_.end(), add.provenance.begin(), add.provenance.end());
    next.origin_.insert(next.origin_.end(), a, next.episode_);
    next.rebuild_caches(&store);
  }
  // The hull can only grow.
  const Mat& V = store.safe_set_.vertices();
  const double tol = 1e-8 * std::max(1.0, next.X_.cwiseAbs().maxCoeff());
  for (int i = 0; i < V.cols(); ++i)
    if (next.safe_set_.has_halfspaces() && !geometry::contains(next.safe_set_, V.col(i), tol)) {
      const double gap = (next.safe_set_.A() * V.col(i) - next.safe_set_.b()).maxCoeff();
      throw InfeasibilityError("update: safe set lost the previous vertex [" +
                               io::format_row(V.col(i)) + "] by " + io::format_number(gap));
    }
  return next;
}

ValueEvaluation evaluate(const LearningStore& store, const Vec& x) {
  const int l = store.size();
  solver::ConvexProgram lp(l);
  lp.set_linear(store.J());
  lp.set_bounds(Vec::Zero(l), Vec::Constant(l, std::numeric_limits<double>::infinity()));
  lp.add_equality("state", store.X(), x);
  lp.add_equality("sum", Mat::Ones(1, l), Vec::Ones(1));
  solver::SolverOptions opt;
  opt.backend = solver::Backend::kSimplex;
  const solver::SolveResult r = solver::solve(lp, opt);
  ValueEvaluation ev;
  if (r.status == solver::SolveStatus::kInfeasible) return ev;
  if (!r.optimal()) throw SolverError("evaluate: " + r.diagnostics);
  ev.feasible = true;
  ev.lambda = r.primal.cwiseMax(0.0);
  ev.lambda /= ev.lambda.sum();
  ev.value = store.J().dot(ev.lambda);
  // d value / d x is minus the equality multiplier in our sign convention.
  ev.subgradient = -r.dual("state");
  return ev;
}

double value(const LearningStore& store, const Vec& x) {
  if (const PlanarLowerHull* h = store.lower_hull()) return h->value(Eigen::Vector2d(x(0), x(1)));
  const ValueEvaluation ev = evaluate(store, x);
  return ev.feasible ? ev.value : std::numeric_limits<double>::infinity();
}

Vec safe_policy(const LearningStore& store, const Vec& x) {
  const ValueEvaluation ev = evaluate(store, x);
  if (!ev.feasible) throw InfeasibilityError("safe_policy: state is outside the safe set");
  return store.U() * ev.lambda;
}

Polytope tightened_terminal(const LearningStore& store, const Polytope& W) {
  if (!store.safe_set().has_halfspaces())
    throw ConfigError("safe set has no facet form (degenerate store)");
  const Polytope t = geometry::pontryagin_diff(store.safe_set(), W);
  if (t.is_empty()) throw ConfigError("tightened safe set is empty");
  return t;
}

std::string save_columns(const LearningStore& store) {
  std::ostringstream os;
  os << "# episode " << store.episode() << " nx " << store.nx() << " nu " << store.nu() << '\n';
  for (int i = 0; i < store.nx(); ++i) os << 'x' << i << ',';
  for (int i = 0; i < store.nu(); ++i) os << 'u' << i << ',';
  os << "J,provenance,origin\n";
  for (int c = 0; c < store.size(); ++c) {
    os << io::format_row(store.X().col(c), ',') << ',' << io::format_row(store.U().col(c), ',')
       << ',' << io::format_number(store.J()(c)) << ',' << to_string(store.provenance()[c]) << ','
       << store.origin()[c] << '\n';
  }
  return os.str();
}

LearningStore load_columns(const std::string& text, const Polytope& W) {
  std::istringstream is(text);
  std::string line;
  int episode = 0, nx = 0, nu = 0;
  if (!std::getline(is, line) ||
      std::sscanf(line.c_str(), "# episode %d nx %d nu %d", &episode, &nx, &nu) != 3 || nx <= 0 ||
      nu <= 0)
    throw ConfigError("column file: bad header");
  std::getline(is, line);  // column names
  std::vector<std::vector<std::string>> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    rows.push_back(io::split(line, ','));
    if (static_cast<int>(rows.back().size()) != nx + nu + 3)
      throw ConfigError("column file: wrong field count");
  }
  const int l = static_cast<int>(rows.size());
  Mat X(nx, l), U(nu, l);
  Vec J(l);
  std::vector<Provenance> prov(l);
  std::vector<int> origin(l);
  try {
    for (int c = 0; c < l; ++c) {
      const auto& r = rows[c];
      for (int i = 0; i < nx; ++i) X(i, c) = io::parse_number(r[i]);
      for (int i = 0; i < nu; ++i) U(i, c) = io::parse_number(r[nx + i]);
      J(c) = io::parse_number(r[nx + nu]);
      prov[c] = parse_provenance(r[nx + nu + 1]);
      origin[c] = std::stoi(r[nx + nu + 2]);
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("column file: ") + e.what());
  }
  return LearningStore::from_columns(episode, X, U, J, std::move(prov), std::move(origin), W);
}

void save_columns_file(const LearningStore& store, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot write " + path);
  f << save_columns(store);
}

LearningStore load_columns_file(const std::string& path, const Polytope& W) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return load_columns(ss.str(), W);
}

}  // namespace lmpc::valuefn
