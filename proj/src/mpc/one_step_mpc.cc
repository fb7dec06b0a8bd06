#include "lmpc/mpc/one_step_mpc.h"

#include <cmath>
#include <limits>

#include "lmpc/harness/stage_cost.h"

namespace lmpc::mpc {

using solver::SolveStatus;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_spec(const MpcProblemSpec& s) {
  if (!s.problem || !s.store || !s.disturbance)
    throw std::invalid_argument("solve_mpc: incomplete spec");
  if (s.disturbance->weights.size() != s.disturbance->size())
    throw std::invalid_argument("solve_mpc: disturbance weights not estimated");
  if (!s.store->tightened().has_halfspaces())
    throw ConfigError("solve_mpc: store has no tightened facets");
}

// Successor offsets (A x + w_m) with their weights; one entry in CE mode.
void successor_terms(const MpcProblemSpec& s, Mat& offsets, Vec& weights) {
  const Vec ax = s.problem->sys.A * s.x;
  if (s.mode == TerminalMode::kCertaintyEquivalent) {
    offsets = ax;
    weights = Vec::Ones(1);
    return;
  }
  const auto& dm = *s.disturbance;
  int k = 0;
  for (int m = 0; m < dm.size(); ++m) k += dm.weights(m) > 0;
  offsets.resize(ax.size(), k);
  weights.resize(k);
  k = 0;
  for (int m = 0; m < dm.size(); ++m) {
    if (dm.weights(m) <= 0) continue;
    offsets.col(k) = ax + dm.samples.col(m);
    weights(k++) = dm.weights(m);
  }
}

double successor_value(const MpcProblemSpec& s, const Vec& u) {
  Mat offsets;
  Vec weights;
  successor_terms(s, offsets, weights);
  const Vec bu = s.problem->sys.B * u;
  double total = 0.0;
  for (int k = 0; k < weights.size(); ++k)
    total += weights(k) * valuefn::value(*s.store, offsets.col(k) + bu);
  return total;
}

// Scalar input, planar state: the objective is a convex function of one
// variable with known one-sided derivatives, so bisection on the derivative
// finds the optimum.
MpcSolution solve_fast(const MpcProblemSpec& s, const MpcOptions& opt) {
  const ControlProblem& p = *s.problem;
  const valuefn::PlanarLowerHull& hull = *s.store->lower_hull();
  const Mat& H = s.store->tightened().A();
  const Vec& h = s.store->tightened().b();
  const geometry::Polytope Uh = p.U.has_halfspaces() ? p.U : p.U.completed();
  const Mat& Hu = Uh.A();
  const Vec& hu = Uh.b();
  const Vec HB = H * p.sys.B;
  const Vec rhs = h - H * (p.sys.A * s.x);

  MpcSolution sol;
  sol.route = "fast";
  sol.nu = Vec::Zero(H.rows());
  sol.gamma = Vec::Zero(Hu.rows());

  // Feasible interval and the rows defining its ends (terminal rows first).
  double lo = -kInf, hi = kInf;
  int lo_row = -1, hi_row = -1;  // >= 0 terminal row, < -1 input row (-2 - i)
  const double flat = 1e-12;
  auto clip = [&](double coef, double r, int tag) {
    if (std::abs(coef) <= flat) return r >= -1e-9;
    const double bound = r / coef;
    // On ties a terminal row wins over an input row.
    if (coef > 0) {
      if (bound < hi - 1e-12 || (bound <= hi + 1e-12 && tag >= 0 && hi_row < 0)) {
        hi = std::min(hi, bound);
        hi_row = tag;
      }
    } else if (bound > lo + 1e-12 || (bound >= lo - 1e-12 && tag >= 0 && lo_row < 0)) {
      lo = std::max(lo, bound);
      lo_row = tag;
    }
    return true;
  };
  bool feasible = true;
  for (int i = 0; i < Hu.rows(); ++i) feasible &= clip(Hu(i, 0), hu(i), -2 - i);
  for (int i = 0; i < H.rows(); ++i) feasible &= clip(HB(i), rhs(i), i);
  if (!feasible || lo > hi + 1e-9 || !std::isfinite(lo) || !std::isfinite(hi)) {
    sol.status = SolveStatus::kInfeasible;
    return sol;
  }
  if (lo > hi) lo = hi = 0.5 * (lo + hi);

  Mat offsets;
  Vec weights;
  successor_terms(s, offsets, weights);
  const Eigen::Vector2d b2(p.sys.B(0, 0), p.sys.B(1, 0));
  const Mat kov = p.KO.completed().vertices();
  const double ka = kov.minCoeff(), kb = kov.maxCoeff();
  auto stage_slope = [&](double u) { return u > kb ? 2 * (u - kb) : u < ka ? 2 * (u - ka) : 0.0; };

  bool outside = false;
  // One-sided derivatives of the objective at u.
  auto slopes = [&](double u, double& left, double& right) {
    left = right = stage_slope(u);
    for (int k = 0; k < weights.size(); ++k) {
      const Eigen::Vector2d y = Eigen::Vector2d(offsets(0, k), offsets(1, k)) + u * b2;
      const auto q = hull.query(y, b2);
      if (!q.inside) outside = true;
      left += weights(k) * q.slope_left;
      right += weights(k) * q.slope_right;
    }
  };

  double u_opt, left, right;
  slopes(lo, left, right);
  if (right >= 0) {
    u_opt = lo;
  } else {
    slopes(hi, left, right);
    if (left <= 0) {
      u_opt = hi;
    } else {
      double a = lo, b = hi;
      u_opt = 0.5 * (a + b);
      for (int it = 0; it < 200 && b - a > 1e-13 * std::max(1.0, std::abs(u_opt)); ++it) {
        u_opt = 0.5 * (a + b);
        slopes(u_opt, left, right);
        if (right < 0) {
          a = u_opt;
        } else if (left > 0) {
          b = u_opt;
        } else {
          break;
        }
      }
    }
  }
  slopes(u_opt, left, right);
  if (outside) {
    sol.status = SolveStatus::kNumericalFailure;
    return sol;
  }

  // Multipliers: the derivative pointing into the feasible interval is
  // balanced by the constraint that stops it.
  auto assign = [&](int row, double coef_sign_slope) {
    if (row >= 0) {
      sol.nu(row) = coef_sign_slope / HB(row);
    } else if (row < -1) {
      const int i = -2 - row;
      sol.gamma(i) = coef_sign_slope / Hu(i, 0);
    }
  };
  if (u_opt >= hi - 1e-12 && left < 0) assign(hi_row, -left);
  else if (u_opt <= lo + 1e-12 && right > 0) assign(lo_row, -right);

  sol.u = Vec::Constant(1, u_opt);
  sol.stage_cost = harness::stage_cost(s.x, sol.u, p.O, p.KO);
  double succ = 0.0;
  for (int k = 0; k < weights.size(); ++k)
    succ += weights(k) * hull.value(Eigen::Vector2d(offsets(0, k), offsets(1, k)) + u_opt * b2);
  sol.successor_cost = succ;
  sol.value = sol.stage_cost + succ;
  if (opt.want_coefficients) {
    for (int k = 0; k < weights.size(); ++k)
      sol.coefficients.push_back(
          hull.coefficients(Eigen::Vector2d(offsets(0, k), offsets(1, k)) + u_opt * b2));
  }
  sol.status = SolveStatus::kOptimal;
  return sol;
}

// One QP in (u, theta, lambda_1..lambda_K): the stage cost through a point
// theta-combination of the vertices of KO, each successor value through its
// own hull coefficients.
MpcSolution solve_assembled(const MpcProblemSpec& s, const MpcOptions& opt) {
  const ControlProblem& p = *s.problem;
  const valuefn::LearningStore& st = *s.store;
  const int nu = p.sys.nu(), nx = p.sys.nx(), l = st.size();
  const Mat kov = p.KO.completed().vertices();
  const int nk = static_cast<int>(kov.cols());
  Mat offsets;
  Vec weights;
  successor_terms(s, offsets, weights);
  const int K = static_cast<int>(weights.size());
  const int n = nu + nk + K * l;

  solver::ConvexProgram qp(n);
  Mat P = Mat::Zero(n, n);
  P.topLeftCorner(nu, nu) = 2 * Mat::Identity(nu, nu);
  P.block(0, nu, nu, nk) = -2 * kov;
  P.block(nu, 0, nk, nu) = -2 * kov.transpose();
  P.block(nu, nu, nk, nk) = 2 * kov.transpose() * kov;
  qp.set_quadratic(P);
  Vec c = Vec::Zero(n);
  for (int k = 0; k < K; ++k) c.segment(nu + nk + k * l, l) = weights(k) * st.J();
  qp.set_linear(c);
  Vec lower = Vec::Constant(n, -kInf), upper = Vec::Constant(n, kInf);
  lower.tail(nk + K * l).setZero();
  qp.set_bounds(lower, upper);

  Mat sum_theta = Mat::Zero(1, n);
  sum_theta.block(0, nu, 1, nk).setOnes();
  qp.add_equality("stage_point", sum_theta, Vec::Ones(1));
  for (int k = 0; k < K; ++k) {
    Mat A = Mat::Zero(nx + 1, n);
    A.block(0, 0, nx, nu) = -p.sys.B;
    A.block(0, nu + nk + k * l, nx, l) = st.X();
    A.block(nx, nu + nk + k * l, 1, l).setOnes();
    Vec b(nx + 1);
    b << offsets.col(k), 1.0;
    qp.add_equality("successor_" + std::to_string(k), A, b);
  }
  const Mat& H = st.tightened().A();
  Mat Ht = Mat::Zero(H.rows(), n);
  Ht.leftCols(nu) = H * p.sys.B;
  qp.add_inequality("terminal", Ht, st.tightened().b() - H * (p.sys.A * s.x));
  const geometry::Polytope Uh = p.U.has_halfspaces() ? p.U : p.U.completed();
  Mat Hu = Mat::Zero(Uh.num_halfspaces(), n);
  Hu.leftCols(nu) = Uh.A();
  qp.add_inequality("input", Hu, Uh.b());

  const solver::SolveResult r = solver::solve(qp, opt.solver);
  MpcSolution sol;
  sol.route = "assembled";
  sol.status = r.status;
  if (!r.optimal()) return sol;
  sol.u = r.primal.head(nu);
  sol.nu = r.dual("terminal");
  sol.gamma = r.dual("input");
  sol.stage_cost = harness::stage_cost(s.x, sol.u, p.O, p.KO);
  double succ = 0.0;
  for (int k = 0; k < K; ++k) {
    Vec lam = r.primal.segment(nu + nk + k * l, l).cwiseMax(0.0);
    lam /= lam.sum();
    succ += weights(k) * st.J().dot(lam);
    if (opt.want_coefficients) sol.coefficients.push_back(lam);
  }
  sol.successor_cost = succ;
  sol.value = sol.stage_cost + succ;
  return sol;
}

}  // namespace

std::string to_string(TerminalMode mode) {
  return mode == TerminalMode::kExpected ? "expected" : "ce";
}

TerminalMode parse_terminal_mode(const std::string& s) {
  if (s == "expected") return TerminalMode::kExpected;
  if (s == "ce" || s == "certainty_equivalent") return TerminalMode::kCertaintyEquivalent;
  throw ConfigError("unknown terminal mode '" + s + "'");
}

MpcSolution solve_mpc(const MpcProblemSpec& spec, const MpcOptions& options) {
  check_spec(spec);
  const bool fast_ok = spec.problem->sys.nx() == 2 && spec.problem->sys.nu() == 1 &&
                       spec.store->lower_hull() != nullptr;
  Route route = options.route;
  if (route == Route::kAuto) route = fast_ok ? Route::kFast : Route::kAssembled;
  if (route == Route::kFast && !fast_ok)
    throw std::invalid_argument("solve_mpc: fast route needs two states and one input");
  return route == Route::kFast ? solve_fast(spec, options) : solve_assembled(spec, options);
}

Vec policy(const MpcProblemSpec& spec, const MpcOptions& options) {
  const MpcSolution sol = solve_mpc(spec, options);
  if (!sol.optimal())
    throw InfeasibilityError(std::string("mpc: ") + solver::to_string(sol.status));
  return sol.u;
}

Vec gradient_at_optimum(const MpcSolution& sol, const MpcProblemSpec& spec) {
  if (!sol.optimal()) throw std::invalid_argument("gradient_at_optimum: no optimal solution");
  const ControlProblem& p = *spec.problem;
  const Mat& H = spec.store->tightened().A();
  const geometry::Polytope Uh = p.U.has_halfspaces() ? p.U : p.U.completed();
  if (sol.nu.size() != H.rows() || sol.gamma.size() != Uh.num_halfspaces())
    throw std::invalid_argument("gradient_at_optimum: multipliers missing");
  return -((H * p.sys.B).transpose() * sol.nu + Uh.A().transpose() * sol.gamma);
}

double objective_at(const MpcProblemSpec& spec, const Vec& u, double tol) {
  const ControlProblem& p = *spec.problem;
  if (!geometry::contains(p.U, u, tol)) return kInf;
  const Vec next = p.sys.nominal(spec.x, u);
  if (!geometry::contains(spec.store->tightened(), next, tol)) return kInf;
  return harness::stage_cost(spec.x, u, p.O, p.KO) + successor_value(spec, u);
}

MpcProblemSpec certainty_equivalent_mode(MpcProblemSpec spec) {
  spec.mode = TerminalMode::kCertaintyEquivalent;
  return spec;
}

}  // namespace lmpc::mpc
