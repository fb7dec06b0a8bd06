#include <limits>

#include <proxsuite/proxqp/dense/dense.hpp>

#include "backends.h"

namespace lmpc::solver::detail {
namespace {

// Re-solves the KKT system on the guessed active set to sharpen the
// first-order solution. Returns false (leaving x, y, z untouched) when the
// polished point is not primal/dual feasible.
bool polish(const Mat& H, const Vec& g, const Mat& Aeq, const Vec& beq, const Mat& C,
            const Vec& l, const Vec& u, Vec& x, Vec& y, Vec& z) {
  const int n = static_cast<int>(x.size());
  const int n_eq = static_cast<int>(Aeq.rows());
  std::vector<int> act;
  std::vector<double> rhs_act;
  std::vector<double> sign;
  for (int i = 0; i < C.rows(); ++i) {
    const double cx = C.row(i).dot(x);
    if (z[i] > 0 && z[i] > u[i] - cx) {
      act.push_back(i);
      rhs_act.push_back(u[i]);
      sign.push_back(1.0);
    } else if (z[i] < 0 && -z[i] > cx - l[i]) {
      act.push_back(i);
      rhs_act.push_back(l[i]);
      sign.push_back(-1.0);
    }
  }
  const int k = n_eq + static_cast<int>(act.size());
  Mat K = Mat::Zero(n + k, n + k);
  Vec rhs(n + k);
  K.topLeftCorner(n, n) = H;
  rhs.head(n) = -g;
  if (n_eq) {
    K.block(0, n, n, n_eq) = Aeq.transpose();
    K.block(n, 0, n_eq, n) = Aeq;
    rhs.segment(n, n_eq) = beq;
  }
  for (size_t a = 0; a < act.size(); ++a) {
    const int r = n + n_eq + static_cast<int>(a);
    K.block(0, r, n, 1) = C.row(act[a]).transpose();
    K.block(r, 0, 1, n) = C.row(act[a]);
    rhs[r] = rhs_act[a];
  }
  Eigen::FullPivLU<Mat> lu(K);
  if (lu.rank() < n + k) return false;
  const Vec sol = lu.solve(rhs);
  const Vec xp = sol.head(n);
  Vec zp = Vec::Zero(C.rows());
  for (size_t a = 0; a < act.size(); ++a) {
    const double m = sol[n + n_eq + static_cast<int>(a)];
    if (m * sign[a] < -1e-10) return false;
    zp[act[a]] = m;
  }
  const Vec cx = C * xp;
  for (int i = 0; i < C.rows(); ++i)
    if (cx[i] > u[i] + 1e-9 || cx[i] < l[i] - 1e-9) return false;
  x = xp;
  if (n_eq) y = sol.segment(n, n_eq);
  z = zp;
  return true;
}

}  // namespace

SolveResult solve_qp_prox(const ConvexProgram& p, const SolverOptions& opt) {
  namespace pq = proxsuite::proxqp;
  const int n = p.num_variables();
  int n_eq = 0, n_in = 0;
  for (const auto& blk : p.equalities()) n_eq += static_cast<int>(blk.b.size());
  for (const auto& blk : p.inequalities()) n_in += static_cast<int>(blk.b.size());
  std::vector<int> bounded;
  for (int j = 0; j < n; ++j)
    if (is_finite_bound(p.lower()[j]) || is_finite_bound(p.upper()[j])) bounded.push_back(j);
  const int n_c = n_in + static_cast<int>(bounded.size());

  Mat Aeq(n_eq, n);
  Vec beq(n_eq);
  int r = 0;
  for (const auto& blk : p.equalities()) {
    Aeq.middleRows(r, blk.b.size()) = blk.A;
    beq.segment(r, blk.b.size()) = blk.b;
    r += static_cast<int>(blk.b.size());
  }
  const double inf = 1e20;
  Mat C = Mat::Zero(n_c, n);
  Vec l = Vec::Constant(n_c, -inf);
  Vec u(n_c);
  r = 0;
  for (const auto& blk : p.inequalities()) {
    C.middleRows(r, blk.b.size()) = blk.A;
    u.segment(r, blk.b.size()) = blk.b;
    r += static_cast<int>(blk.b.size());
  }
  for (int j : bounded) {
    C(r, j) = 1.0;
    l[r] = is_finite_bound(p.lower()[j]) ? p.lower()[j] : -inf;
    u[r] = is_finite_bound(p.upper()[j]) ? p.upper()[j] : inf;
    ++r;
  }
  Mat H = p.has_quadratic() ? p.quadratic() : Mat::Zero(n, n);

  pq::dense::QP<double> qp(n, n_eq, n_c);
  qp.settings.eps_abs = std::min(opt.feasibility_tol, 1e-9);
  qp.settings.eps_rel = 0.0;
  qp.settings.max_iter = 100000;
  qp.settings.verbose = verbosity() >= 2;
  qp.settings.primal_infeasibility_solving = false;
  qp.init(H, p.linear(), Aeq, beq, C, l, u);
  qp.solve();

  SolveResult res;
  switch (qp.results.info.status) {
    case pq::QPSolverOutput::PROXQP_SOLVED: res.status = SolveStatus::kOptimal; break;
    case pq::QPSolverOutput::PROXQP_PRIMAL_INFEASIBLE: res.status = SolveStatus::kInfeasible; break;
    case pq::QPSolverOutput::PROXQP_DUAL_INFEASIBLE: res.status = SolveStatus::kUnbounded; break;
    default:
      res.status = SolveStatus::kNumericalFailure;
      res.diagnostics = "proxqp status " + std::to_string(static_cast<int>(qp.results.info.status)) +
                        " after " + std::to_string(qp.results.info.iter) + " iterations";
      return res;
  }
  if (!res.optimal()) return res;
  Vec x = qp.results.x, y = qp.results.y, z = qp.results.z;
  const bool polished = polish(H, p.linear(), Aeq, beq, C, l, u, x, y, z);
  res.primal = x;
  res.objective = p.objective(res.primal);
  r = 0;
  for (const auto& blk : p.equalities()) {
    res.duals[blk.label] = y.segment(r, blk.b.size());
    r += static_cast<int>(blk.b.size());
  }
  r = 0;
  for (const auto& blk : p.inequalities()) {
    res.duals[blk.label] = z.segment(r, blk.b.size()).cwiseMax(0.0);
    r += static_cast<int>(blk.b.size());
  }
  Vec mu_lo = Vec::Zero(n), mu_up = Vec::Zero(n);
  for (int j : bounded) {
    const double zj = z[r++];
    if (zj > 0) mu_up[j] = zj; else mu_lo[j] = -zj;
  }
  res.duals[kLowerBoundLabel] = mu_lo;
  res.duals[kUpperBoundLabel] = mu_up;
  res.diagnostics = "proxqp iterations " + std::to_string(qp.results.info.iter) +
                    (polished ? ", polished" : "");
  return res;
}

}  // namespace lmpc::solver::detail
