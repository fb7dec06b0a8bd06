#include "lmpc/exploration/exploration.h"

#include <limits>

#include "lmpc/solver/convex_program.h"

namespace lmpc::exploration {

using geometry::Polytope;

std::string to_string(BatchMode mode) {
  switch (mode) {
    case BatchMode::kBoundaryLp: return "boundary-lp";
    case BatchMode::kInSetSample: return "in-set-sample";
    case BatchMode::kFallback: return "fallback";
  }
  return "?";
}

double distance_value(const Vec& nu, const Mat& H, const Mat& B, const Vec& d) {
  return nu.dot(H * (B * d));
}

namespace {

struct Boundary {
  bool ok = false;
  Vec d;
  Mat states;
};

// Push the input along the descent-free directions that move the nominal
// successor furthest across the active terminal facets, while every vertex
// realization stays steerable into the tightened safe set.
Boundary boundary_lp(const mpc::MpcProblemSpec& spec, const mpc::MpcSolution& sol,
                     const Polytope& X_minus_W) {
  const ControlProblem& p = *spec.problem;
  const valuefn::LearningStore& st = *spec.store;
  const int nu = p.sys.nu(), nx = p.sys.nx();
  const Mat VW = st.disturbance_set().vertices();
  const int lw = static_cast<int>(VW.cols());
  const Mat& H = st.tightened().A();
  const Vec& h = st.tightened().b();
  const Polytope Uh = p.U.has_halfspaces() ? p.U : p.U.completed();
  const Vec grad = mpc::gradient_at_optimum(sol, spec);
  const Vec base = p.sys.nominal(spec.x, sol.u);  // A x + B u*

  const int n = nu * (1 + lw);
  solver::ConvexProgram lp(n);
  Vec c = Vec::Zero(n);
  c.head(nu) = -(H * p.sys.B).transpose() * sol.nu;
  lp.set_linear(c);

  lp.add_inequality("descent", [&] {
    Mat r = Mat::Zero(1, n);
    r.leftCols(nu) = grad.transpose();
    return r;
  }(), Vec::Zero(1));
  {
    Mat r = Mat::Zero(X_minus_W.num_halfspaces(), n);
    r.leftCols(nu) = X_minus_W.A() * p.sys.B;
    lp.add_inequality("state", r, X_minus_W.b() - X_minus_W.A() * base);
  }
  {
    Mat r = Mat::Zero(Uh.num_halfspaces(), n);
    r.leftCols(nu) = Uh.A();
    lp.add_inequality("input", r, Uh.b() - Uh.A() * sol.u);
  }
  for (int i = 0; i < lw; ++i) {
    // A (base + B d + v_i) + B u_i in the tightened safe set.
    const Vec xi0 = base + VW.col(i);
    Mat r = Mat::Zero(H.rows(), n);
    r.leftCols(nu) = H * p.sys.A * p.sys.B;
    r.middleCols(nu * (1 + i), nu) = H * p.sys.B;
    lp.add_inequality("vertex_" + std::to_string(i), r, h - H * (p.sys.A * xi0));
    Mat ru = Mat::Zero(Uh.num_halfspaces(), n);
    ru.middleCols(nu * (1 + i), nu) = Uh.A();
    lp.add_inequality("vertex_input_" + std::to_string(i), ru, Uh.b());
  }
  solver::SolverOptions opt;
  opt.backend = solver::Backend::kSimplex;
  const solver::SolveResult r = solver::solve(lp, opt);
  Boundary out;
  if (r.status == solver::SolveStatus::kUnbounded)
    throw SolverError("exploration: boundary program is unbounded");
  if (!r.optimal()) return out;
  out.ok = true;
  out.d = r.primal.head(nu);
  const Vec center = base + p.sys.B * out.d;
  out.states.resize(nx, lw);
  for (int i = 0; i < lw; ++i) out.states.col(i) = center + VW.col(i);
  return out;
}

}  // namespace

ExplorationBatch explore_step(const mpc::MpcProblemSpec& spec, const mpc::MpcSolution& sol,
                              const Polytope& X_minus_W, int step, Rng& rng,
                              const ExplorationOptions& options,
                              const mpc::MpcOptions& mpc_options) {
  if (!sol.optimal()) throw std::invalid_argument("explore_step: MPC solution is not optimal");
  const ControlProblem& p = *spec.problem;
  const valuefn::LearningStore& st = *spec.store;
  const int nx = p.sys.nx();
  const Mat VW = st.disturbance_set().vertices();
  const int lw = static_cast<int>(VW.cols());

  ExplorationBatch batch;
  batch.step = step;
  batch.direction = Vec::Zero(p.sys.nu());
  Mat candidates(nx, lw);
  if (sol.nu.size() > 0 && sol.nu.cwiseAbs().maxCoeff() > options.nu_threshold) {
    const Boundary b = boundary_lp(spec, sol, X_minus_W);
    if (b.ok) {
      batch.mode = BatchMode::kBoundaryLp;
      batch.direction = b.d;
      batch.distance = distance_value(sol.nu, st.tightened().A(), p.sys.B, b.d);
      candidates = b.states;
    } else {
      // d = 0 is always admissible; the realized vertices are the batch.
      batch.mode = BatchMode::kFallback;
      const Vec base = p.sys.nominal(spec.x, sol.u);
      for (int i = 0; i < lw; ++i) candidates.col(i) = base + VW.col(i);
    }
  } else {
    batch.mode = BatchMode::kInSetSample;
    std::normal_distribution<double> g(0.0, options.sample_scale);
    int accepted = 0, tries = 0;
    Vec y(nx);
    while (accepted < lw && tries < options.max_rejections) {
      ++tries;
      for (int i = 0; i < nx; ++i) y(i) = spec.x(i) + g(rng);
      if (geometry::contains(st.safe_set(), y, 0.0)) candidates.col(accepted++) = y;
    }
    for (; accepted < lw; ++accepted) candidates.col(accepted) = spec.x;
  }

  batch.states.resize(nx, 0);
  batch.inputs.resize(p.sys.nu(), 0);
  for (int i = 0; i < lw; ++i) {
    mpc::MpcProblemSpec s = spec;
    s.x = candidates.col(i);
    const mpc::MpcSolution r = mpc::solve_mpc(s, mpc_options);
    if (!r.optimal()) {
      ++batch.dropped;
      continue;
    }
    const int k = batch.size();
    batch.states.conservativeResize(Eigen::NoChange, k + 1);
    batch.inputs.conservativeResize(Eigen::NoChange, k + 1);
    batch.costs.conservativeResize(k + 1);
    batch.states.col(k) = s.x;
    batch.inputs.col(k) = r.u;
    batch.costs(k) = r.value;
  }
  return batch;
}

}  // namespace lmpc::exploration
