#include "lmpc/baselines/value_iteration.h"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "lmpc/io/number_format.h"
#include "lmpc/parallel.h"
#include "lmpc/valuefn/diagnostics.h"

namespace lmpc::baselines {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double sup_change(const Vec& a, const Vec& b) {
  double worst = 0.0;
  for (int i = 0; i < a.size(); ++i) {
    if (std::isfinite(a(i)) != std::isfinite(b(i))) return kInf;
    if (std::isfinite(a(i))) worst = std::max(worst, std::abs(a(i) - b(i)));
  }
  return worst;
}

}  // namespace

int GridValueFunction::num_feasible() const {
  int n = 0;
  for (int i = 0; i < values.size(); ++i) n += std::isfinite(values(i));
  return n;
}

Mat lattice(const geometry::Polytope& X, double h) {
  if (!(h > 0)) throw ConfigError("lattice: spacing must be positive");
  const geometry::Polytope Xc = X.completed();
  if (Xc.num_vertices() == 0) throw ConfigError("lattice: empty state set");
  const Vec lo = Xc.vertices().rowwise().minCoeff();
  const Vec hi = Xc.vertices().rowwise().maxCoeff();
  const int n = static_cast<int>(lo.size());
  std::vector<int> count(n);
  long total = 1;
  for (int d = 0; d < n; ++d) {
    count[d] = static_cast<int>(std::floor((hi(d) - lo(d)) / h + 1e-9)) + 1;
    total *= count[d];
  }
  if (total > 10'000'000) throw ConfigError("lattice: too many grid points");
  Mat pts(n, total);
  int kept = 0;
  std::vector<int> idx(n, 0);
  Vec x(n);
  for (long c = 0; c < total; ++c) {
    // First coordinate varies fastest.
    for (int d = 0; d < n; ++d) x(d) = lo(d) + h * idx[d];
    if (geometry::contains(Xc, x, 1e-9)) pts.col(kept++) = x;
    for (int d = 0; d < n && ++idx[d] == count[d]; ++d) idx[d] = 0;
  }
  return pts.leftCols(kept);
}

valuefn::LearningStore grid_store(const GridValueFunction& v, const geometry::Polytope& W) {
  const int n = v.num_feasible();
  if (n == 0) throw ConfigError("value iteration: no feasible grid point");
  Mat X(v.points.rows(), n), U(v.inputs.rows(), n);
  Vec J(n);
  int k = 0;
  for (int i = 0; i < v.size(); ++i) {
    if (!v.feasible(i)) continue;
    X.col(k) = v.points.col(i);
    U.col(k) = v.inputs.col(i);
    J(k++) = v.values(i);
  }
  valuefn::LearningStore store = valuefn::LearningStore::from_columns(
      v.iterations, X, U, J, std::vector<valuefn::Provenance>(n, valuefn::Provenance::kInitial),
      std::vector<int>(n, 0), W);
  if (store.degenerate() || !store.tightened().has_halfspaces() ||
      store.tightened().num_vertices() == 0)
    throw ConfigError("value iteration: feasible grid points do not span a robust region");
  return store;
}

GridValueFunction bellman_sweep(const GridValueFunction& v, const ControlProblem& problem,
                                const disturbance::DisturbanceModel& dm,
                                const mpc::MpcOptions& options) {
  const valuefn::LearningStore store = grid_store(v, problem.W);
  GridValueFunction next = v;
  next.iterations = v.iterations + 1;
  parallel_for(v.size(), [&](int i) {
    mpc::MpcProblemSpec spec{v.points.col(i), &problem, &store, &dm,
                             mpc::TerminalMode::kExpected};
    const mpc::MpcSolution sol = mpc::solve_mpc(spec, options);
    if (sol.optimal()) {
      next.values(i) = sol.value;
      next.inputs.col(i) = sol.u;
    } else {
      next.values(i) = kInf;
      next.inputs.col(i).setZero();
    }
  });
  next.history.push_back(sup_change(v.values, next.values));
  return next;
}

GridValueFunction value_iteration(const Mat& points, const ControlProblem& problem,
                                  const disturbance::DisturbanceModel& dm,
                                  const ValueIterationOptions& options) {
  GridValueFunction v;
  v.points = points;
  v.values = Vec::Zero(points.cols());
  v.inputs = Mat::Zero(problem.sys.nu(), points.cols());
  v.spacing = options.spacing;
  for (int it = 0; it < options.max_iter; ++it) {
    v = bellman_sweep(v, problem, dm, options.mpc);
    if (v.num_feasible() == 0) throw ConfigError("value iteration: every grid point is infeasible");
    if (v.history.back() < options.tol) {
      v.converged = true;
      break;
    }
  }
  return v;
}

GridValueFunction value_iteration(const ControlProblem& problem,
                                  const disturbance::DisturbanceModel& dm,
                                  const ValueIterationOptions& options) {
  return value_iteration(lattice(problem.X, options.spacing), problem, dm, options);
}

double interpolate(const GridValueFunction& v, const geometry::Polytope& W, const Vec& x) {
  return valuefn::value(grid_store(v, W), x);
}

std::string export_table(const GridValueFunction& v) {
  std::ostringstream out;
  for (int d = 0; d < v.points.rows(); ++d) out << 'x' << d + 1 << ',';
  out << "value,feasible\n";
  for (int i = 0; i < v.size(); ++i) {
    for (int d = 0; d < v.points.rows(); ++d) out << io::format_number(v.points(d, i)) << ',';
    out << io::format_number(v.values(i)) << ',' << (v.feasible(i) ? 1 : 0) << '\n';
  }
  return out.str();
}

void export_table_file(const GridValueFunction& v, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot write " + path);
  f << export_table(v);
}

GridValueFunction import_table(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("value table: empty");
  const int cols = static_cast<int>(io::split(line, ',').size());
  const int nx = cols - 2;
  if (nx < 1) throw ConfigError("value table: bad header");
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = io::split(line, ',');
    if (static_cast<int>(f.size()) != cols) throw ConfigError("value table: bad row");
    std::vector<double> r(nx + 1);
    try {
      for (int d = 0; d <= nx; ++d) r[d] = io::parse_number(f[d]);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("value table: ") + e.what());
    }
    rows.push_back(std::move(r));
  }
  GridValueFunction v;
  const int n = static_cast<int>(rows.size());
  v.points.resize(nx, n);
  v.values.resize(n);
  for (int i = 0; i < n; ++i) {
    for (int d = 0; d < nx; ++d) v.points(d, i) = rows[i][d];
    v.values(i) = rows[i][nx];
  }
  v.inputs = Mat::Zero(1, n);
  if (n > 1) v.spacing = (v.points.col(1) - v.points.col(0)).cwiseAbs().maxCoeff();
  return v;
}

GridValueFunction import_table_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return import_table(ss.str());
}

FixedPointReport fixed_point_check(const valuefn::LearningStore& store,
                                   const ControlProblem& problem,
                                   const disturbance::DisturbanceModel& dm, int count, Rng& rng,
                                   double tol) {
  const Mat pts = valuefn::sample_safe_set(store, count, rng);
  std::vector<double> excess(count, -kInf);
  parallel_for(count, [&](int i) {
    mpc::MpcProblemSpec spec{pts.col(i), &problem, &store, &dm, mpc::TerminalMode::kExpected};
    const mpc::MpcSolution sol = mpc::solve_mpc(spec);
    // An infeasible Bellman step means T Q = +inf, which never violates.
    if (sol.optimal()) excess[i] = valuefn::value(store, pts.col(i)) - sol.value;
  });
  FixedPointReport r;
  r.checked = count;
  r.worst_excess = -kInf;
  for (double e : excess) {
    r.worst_excess = std::max(r.worst_excess, e);
    r.violations += e > tol;
  }
  return r;
}

}  // namespace lmpc::baselines
