#include "lmpc/init/initialization.h"

#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "lmpc/parallel.h"
#include "lmpc/solver/convex_program.h"

namespace lmpc::init {

using geometry::Polytope;

namespace {

Mat riccati_step(const Mat& A, const Mat& B, const Mat& Q, const Mat& R, const Mat& P) {
  const Mat BtP = B.transpose() * P;
  const Mat G = R + BtP * B;
  const Mat next = Q + A.transpose() * P * A - (BtP * A).transpose() * G.ldlt().solve(BtP * A);
  return 0.5 * (next + next.transpose());
}

void check_lqr_shapes(const Mat& A, const Mat& B, const Mat& Q, const Mat& R) {
  const auto n = A.rows(), m = B.cols();
  if (A.cols() != n || B.rows() != n || Q.rows() != n || Q.cols() != n || R.rows() != m ||
      R.cols() != m)
    throw ConfigError("lqr: inconsistent matrix sizes");
}

// Tightened halfspaces {x : H x <= h - support(S, H_i)} without any
// redundancy removal; keeps degenerate (single point) results usable.
void tightened(const Polytope& P, const Polytope& S, Mat& H, Vec& h) {
  const Polytope Ph = P.has_halfspaces() ? P : P.completed();
  const Polytope Sv = S.has_vertices() ? S : S.completed();
  H = Ph.A();
  h = Ph.b();
  for (int i = 0; i < h.size(); ++i) h(i) -= geometry::support(Sv, H.row(i).transpose());
}

double max_violation(const Mat& H, const Vec& h, const Vec& x) {
  return std::max(0.0, (H * x - h).maxCoeff());
}

}  // namespace

double riccati_residual(const Mat& A, const Mat& B, const Mat& Q, const Mat& R, const Mat& P) {
  const Mat next = riccati_step(A, B, Q, R, P);
  return (next - P).cwiseAbs().maxCoeff() / std::max(1.0, P.cwiseAbs().maxCoeff());
}

Mat riccati_solution(const Mat& A, const Mat& B, const Mat& Q, const Mat& R, double tol,
                     int max_iterations) {
  check_lqr_shapes(A, B, Q, R);
  Mat P = Q;
  for (int it = 0; it < max_iterations; ++it) {
    const Mat next = riccati_step(A, B, Q, R, P);
    const double change = (next - P).cwiseAbs().maxCoeff() / std::max(1.0, next.cwiseAbs().maxCoeff());
    P = next;
    if (!P.allFinite()) break;
    if (change < tol && riccati_residual(A, B, Q, R, P) < tol) return P;
  }
  throw SolverError("lqr: Riccati iteration did not converge");
}

Mat lqr_gain(const Mat& A, const Mat& B, const Mat& Q, const Mat& R, double tol,
             int max_iterations) {
  const Mat P = riccati_solution(A, B, Q, R, tol, max_iterations);
  const Mat BtP = B.transpose() * P;
  return -(R + BtP * B).ldlt().solve(BtP * A);
}

double spectral_radius(const Mat& M) {
  return Eigen::EigenSolver<Mat>(M, false).eigenvalues().cwiseAbs().maxCoeff();
}

Polytope input_image(const Mat& K, const Polytope& O) { return O.completed().linear_map(K); }

Polytope build_target_set(const LinearSystem& sys, const Mat& K, const Polytope& W,
                          const Polytope& X, const Polytope& U, double eps) {
  const Mat Acl = sys.A + sys.B * K;
  if (spectral_radius(Acl) >= 1.0) throw ConfigError("target set: A+BK is not stable");
  Polytope O = geometry::approximate_min_rpi(Acl, W, eps).completed();
  const Mat& V = O.vertices();
  for (int i = 0; i < V.cols(); ++i) {
    if (!geometry::contains(X, V.col(i)))
      throw ConfigError("target set: O is not contained in the state constraints");
    if (!geometry::contains(U, K * V.col(i)))
      throw ConfigError("target set: K maps O outside the input constraints");
  }
  return O;
}

TubePlan plan_tube(const Vec& x_start, const LinearSystem& sys, const Mat& K, const Polytope& E,
                   const Polytope& X, const Polytope& U, const Polytope& O, int max_horizon) {
  const int nx = sys.nx(), nu = sys.nu();
  if (x_start.size() != nx) throw ConfigError("plan_tube: start state has the wrong dimension");
  if (!geometry::contains(X, x_start)) throw ConfigError("plan_tube: start state is outside X");

  Mat Hx, Hu, Ho;
  Vec hx, hu, ho;
  tightened(X, E, Hx, hx);
  tightened(U, input_image(K, E), Hu, hu);
  tightened(O, E, Ho, ho);
  if (max_violation(Hx, hx, x_start) > 1e-9)
    throw ConfigError("plan_tube: start state tube leaves X");

  solver::SolverOptions opt;
  opt.backend = solver::Backend::kSimplex;
  for (int T = 1; T <= max_horizon; ++T) {
    const int nv = nu * (T + 1);
    // Condensed dynamics: x_k = Phi_k x0 + Gamma_k u.
    std::vector<Mat> Gamma(T + 2, Mat::Zero(nx, nv));
    std::vector<Vec> free(T + 2);
    free[0] = x_start;
    for (int k = 0; k <= T; ++k) {
      free[k + 1] = sys.A * free[k];
      Gamma[k + 1] = sys.A * Gamma[k];
      Gamma[k + 1].middleCols(k * nu, nu) += sys.B;
    }
    const int rows = static_cast<int>(Hx.rows()) * T + static_cast<int>(Hu.rows()) * (T + 1) +
                     static_cast<int>(Ho.rows());
    Mat G(rows, nv);
    Vec g(rows);
    int r = 0;
    for (int k = 1; k <= T; ++k) {
      G.middleRows(r, Hx.rows()) = Hx * Gamma[k];
      g.segment(r, Hx.rows()) = hx - Hx * free[k];
      r += static_cast<int>(Hx.rows());
    }
    for (int k = 0; k <= T; ++k) {
      G.middleRows(r, Hu.rows()).setZero();
      G.middleRows(r, Hu.rows()).middleCols(k * nu, nu) = Hu;
      g.segment(r, Hu.rows()) = hu;
      r += static_cast<int>(Hu.rows());
    }
    G.middleRows(r, Ho.rows()) = Ho * Gamma[T + 1];
    g.segment(r, Ho.rows()) = ho - Ho * free[T + 1];

    solver::ConvexProgram lp(nv);
    lp.add_inequality("tube", G, g);
    const solver::SolveResult res = solver::solve(lp, opt);
    if (res.status == solver::SolveStatus::kInfeasible) continue;
    if (!res.optimal()) throw SolverError("plan_tube: " + res.diagnostics);

    TubePlan plan;
    plan.horizon = T;
    plan.E = E.completed();
    plan.K = K;
    plan.inputs = Eigen::Map<const Mat>(res.primal.data(), nu, T + 1);
    plan.states.resize(nx, T + 2);
    plan.states.col(0) = x_start;
    for (int k = 0; k <= T; ++k)
      plan.states.col(k + 1) = sys.nominal(plan.states.col(k), plan.inputs.col(k));
    const PlanResiduals pr = plan_residuals(plan, sys, X, U, O);
    if (std::max({pr.state, pr.input, pr.terminal}) > 1e-8)
      throw SolverError("plan_tube: plan violates the tightened constraints");
    return plan;
  }
  throw InfeasibilityError("plan_tube: no feasible horizon up to " + std::to_string(max_horizon));
}

PlanResiduals plan_residuals(const TubePlan& plan, const LinearSystem& sys, const Polytope& X,
                             const Polytope& U, const Polytope& O) {
  Mat Hx, Hu, Ho;
  Vec hx, hu, ho;
  tightened(X, plan.E, Hx, hx);
  tightened(U, input_image(plan.K, plan.E), Hu, hu);
  tightened(O, plan.E, Ho, ho);
  PlanResiduals r;
  const int T = plan.horizon;
  for (int k = 0; k <= T; ++k) {
    const Vec next = sys.nominal(plan.states.col(k), plan.inputs.col(k));
    r.dynamics = std::max(r.dynamics, (next - plan.states.col(k + 1)).cwiseAbs().maxCoeff());
    r.state = std::max(r.state, max_violation(Hx, hx, plan.states.col(k)));
    r.input = std::max(r.input, max_violation(Hu, hu, plan.inputs.col(k)));
  }
  r.terminal = max_violation(Ho, ho, plan.states.col(T + 1));
  return r;
}

InitialData build_initial_data(const TubePlan& plan, const Polytope& O, const StageCost& stage_cost) {
  const Mat VO = O.completed().vertices();
  const Mat& VE = plan.E.vertices();
  const int T = plan.horizon;
  const int lo = static_cast<int>(VO.cols()), le = static_cast<int>(VE.cols());
  const int nx = static_cast<int>(VO.rows()), nu = static_cast<int>(plan.K.rows());

  InitialData data;
  data.num_target_columns = lo;
  const int total = lo + le * (T + 2);
  data.X.resize(nx, total);
  data.U.resize(nu, total);
  data.J = Vec::Zero(total);
  data.tube.assign(total, -1);
  for (int i = 0; i < lo; ++i) {
    data.X.col(i) = VO.col(i);
    data.U.col(i) = plan.K * VO.col(i);
  }
  for (int k = 0; k <= T + 1; ++k) {
    for (int v = 0; v < le; ++v) {
      const int c = lo + k * le + v;
      data.X.col(c) = plan.states.col(k) + VE.col(v);
      data.U.col(c) = k <= T ? Vec(plan.inputs.col(k) + plan.K * VE.col(v))
                             : Vec(plan.K * data.X.col(c));
      data.tube[c] = k;
    }
  }
  // Stage cost at every tube vertex, then the backward max recursion.
  Vec cost = Vec::Zero(total);
  parallel_for(le * (T + 1), [&](int i) {
    const int c = lo + i;
    cost(c) = stage_cost(data.X.col(c), data.U.col(c));
  });
  double to_go = 0.0;  // tube T+1
  for (int k = T; k >= 0; --k) {
    double worst = 0.0;
    for (int v = 0; v < le; ++v) worst = std::max(worst, cost(lo + k * le + v));
    to_go += worst;
    data.J.segment(lo + k * le, le).setConstant(to_go);
  }
  return data;
}

std::string InitialConditionReport::summary() const {
  std::ostringstream os;
  os << (ok() ? "ok" : "violated") << ": " << violators.size() << " of " << margins.size()
     << " columns, worst margin " << worst_margin;
  return os.str();
}

InitialConditionReport validate_initial_condition(const InitialData& data,
                                                  const ValueEvaluator& value,
                                                  const disturbance::DisturbanceModel& dm,
                                                  const LinearSystem& sys,
                                                  const StageCost& stage_cost, double tol) {
  if (dm.weights.size() != dm.size())
    throw std::invalid_argument("validate_initial_condition: weights not estimated");
  InitialConditionReport rep;
  rep.margins.resize(data.size());
  parallel_for(data.size(), [&](int i) {
    const Vec x = data.X.col(i), u = data.U.col(i);
    const Vec nominal = sys.nominal(x, u);
    double expected = 0.0;
    for (int m = 0; m < dm.size(); ++m) {
      if (dm.weights(m) == 0.0) continue;
      expected += dm.weights(m) * value(nominal + dm.samples.col(m));
    }
    rep.margins(i) = data.J(i) - stage_cost(x, u) - expected;
  });
  rep.worst_margin = data.size() ? rep.margins.minCoeff() : 0.0;
  for (int i = 0; i < data.size(); ++i)
    if (!(rep.margins(i) >= -tol)) rep.violators.push_back(i);
  return rep;
}

}  // namespace lmpc::init
