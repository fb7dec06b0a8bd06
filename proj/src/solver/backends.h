#pragma once

#include "lmpc/solver/convex_program.h"

namespace lmpc::solver::detail {

// Dense two-phase revised simplex. Returns a basic (vertex) solution.
SolveResult solve_lp_simplex(const ConvexProgram& program, const SolverOptions& options);

// ProxQP dense backend.
SolveResult solve_qp_prox(const ConvexProgram& program, const SolverOptions& options);

inline bool is_finite_bound(double v) { return std::abs(v) < 1e20; }

}  // namespace lmpc::solver::detail
