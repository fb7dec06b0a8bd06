#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lmpc/common.h"

namespace lmpc::solver {

/// A labeled block of linear constraints, `A x = b` or `A x <= b`.
struct ConstraintBlock {
  std::string label;
  Mat A;
  Vec b;
};

/// Dual labels reserved for the per-variable bounds.
inline constexpr const char* kLowerBoundLabel = "lower_bound";
inline constexpr const char* kUpperBoundLabel = "upper_bound";

/// min 0.5 x'Px + c'x  s.t. equality blocks, inequality blocks, lower <= x <= upper.
///
/// Duals follow the convention
///   P x + c + sum A_eq' y + sum A_in' z - mu_lower + mu_upper = 0,
/// with z, mu_lower, mu_upper >= 0.
class ConvexProgram {
 public:
  explicit ConvexProgram(int num_variables);

  int num_variables() const { return n_; }

  void set_quadratic(const Mat& P);
  void set_linear(const Vec& c);
  /// Bounds default to (-inf, +inf).
  void set_bounds(const Vec& lower, const Vec& upper);
  void set_lower_bound(int index, double value);
  void set_upper_bound(int index, double value);

  void add_equality(const std::string& label, const Mat& A, const Vec& b);
  void add_inequality(const std::string& label, const Mat& A, const Vec& b);

  bool has_quadratic() const { return P_.has_value(); }
  const Mat& quadratic() const { return *P_; }
  const Vec& linear() const { return c_; }
  const Vec& lower() const { return lower_; }
  const Vec& upper() const { return upper_; }
  const std::vector<ConstraintBlock>& equalities() const { return eq_; }
  const std::vector<ConstraintBlock>& inequalities() const { return in_; }

  /// Objective value at x.
  double objective(const Vec& x) const;

 private:
  void check_label(const std::string& label) const;

  int n_;
  std::optional<Mat> P_;
  Vec c_;
  Vec lower_;
  Vec upper_;
  std::vector<ConstraintBlock> eq_;
  std::vector<ConstraintBlock> in_;
};

enum class SolveStatus { kOptimal, kInfeasible, kUnbounded, kNumericalFailure };

const char* to_string(SolveStatus status);

struct SolveResult {
  SolveStatus status = SolveStatus::kNumericalFailure;
  Vec primal;
  double objective = 0.0;
  std::map<std::string, Vec> duals;
  double solve_seconds = 0.0;
  std::string diagnostics;

  bool optimal() const { return status == SolveStatus::kOptimal; }
  /// Throws SolverError if the label is unknown.
  const Vec& dual(const std::string& label) const;
};

enum class Backend { kAuto, kSimplex, kProxQp };

struct SolverOptions {
  /// kAuto: simplex for LPs, ProxQP for QPs. Forcing kSimplex on a QP is an error.
  Backend backend = Backend::kAuto;
  double feasibility_tol = 1e-8;
  double optimality_tol = 1e-8;
  int max_iterations = 50000;
  /// Extra post-solve checks: weak duality on LPs, complementarity on QPs.
  bool debug_checks = false;
};

/// Dispatches to the LP backend when there is no quadratic term and to the
/// QP backend otherwise.
SolveResult solve(const ConvexProgram& program, const SolverOptions& options = {});

/// Residuals of the KKT system at a result; used by tests and debug checks.
struct KktResiduals {
  double primal = 0.0;         // max constraint violation
  double stationarity = 0.0;   // inf-norm of the Lagrangian gradient
  double dual_sign = 0.0;      // most negative inequality multiplier, as a positive number
  double complementarity = 0.0;
};
KktResiduals kkt_residuals(const ConvexProgram& program, const SolveResult& result);

/// Plain-text dump of a program, readable by parse_program.
std::string dump_program(const ConvexProgram& program);
ConvexProgram parse_program(const std::string& text);

/// Solver verbosity from LMPC_SOLVER_VERBOSE (0 when unset).
int verbosity();

}  // namespace lmpc::solver
