#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <vector>

#include "backends.h"

namespace lmpc::solver::detail {
namespace {

constexpr double kPivotTol = 1e-9;
constexpr int kRefactorEvery = 64;
constexpr int kDegenerateBeforeBland = 50;

// How an original variable maps onto nonnegative standard-form columns.
enum class VarKind { kShiftLower, kMirrorUpper, kSplitFree };

struct VarMap {
  VarKind kind;
  int col;        // first standard column
  double offset;  // lower or upper bound
};

// Where a standard-form row came from, for dual recovery.
struct RowOrigin {
  enum Kind { kEq, kIneq, kUpperBound } kind;
  int block;  // block index (or variable index for kUpperBound)
  int row;    // row inside the block
  double factor;  // standard row = factor * original row
};

class StandardForm {
 public:
  StandardForm(const ConvexProgram& p) : p_(p) { build(); }

  SolveResult run(const SolverOptions& opt);

 private:
  void build();
  void refactor();
  bool iterate(bool phase_one, const SolverOptions& opt, int& iterations, SolveStatus& status);
  void compute_basic_values();
  void pivot(int leave_row, int enter_col, const Vec& alpha);

  const ConvexProgram& p_;
  int n_orig_ = 0;
  std::vector<VarMap> vars_;
  int n_struct_ = 0;  // structural standard columns (variables)
  int n_cols_ = 0;    // structural + slack + artificial
  int m_ = 0;
  Mat A_;             // m x n_cols
  Vec b_;
  Vec cost_;          // phase-two cost over all columns
  std::vector<RowOrigin> rows_;
  std::vector<char> is_artificial_;
  std::vector<int> basis_;      // basis_[row] = column
  std::vector<int> where_;      // where_[col] = row or -1
  Mat Binv_;
  Vec xB_;
  int since_refactor_ = 0;
};

void StandardForm::build() {
  n_orig_ = p_.num_variables();
  const Vec& lo = p_.lower();
  const Vec& up = p_.upper();
  // Columns for the variables.
  int col = 0;
  std::vector<int> upper_rows;  // variables needing an explicit upper-bound row
  for (int j = 0; j < n_orig_; ++j) {
    if (is_finite_bound(lo[j])) {
      vars_.push_back({VarKind::kShiftLower, col, lo[j]});
      col += 1;
      if (is_finite_bound(up[j])) upper_rows.push_back(j);
    } else if (is_finite_bound(up[j])) {
      vars_.push_back({VarKind::kMirrorUpper, col, up[j]});
      col += 1;
    } else {
      vars_.push_back({VarKind::kSplitFree, col, 0.0});
      col += 2;
    }
  }
  n_struct_ = col;

  int n_eq = 0, n_in = 0;
  for (const auto& blk : p_.equalities()) n_eq += static_cast<int>(blk.b.size());
  for (const auto& blk : p_.inequalities()) n_in += static_cast<int>(blk.b.size());
  const int n_ub = static_cast<int>(upper_rows.size());
  m_ = n_eq + n_in + n_ub;
  const int n_slack = n_in + n_ub;

  // Rows of the original constraints expressed in the structural columns.
  Mat rowsA = Mat::Zero(m_, n_struct_);
  Vec rowsb(m_);
  std::vector<char> is_ineq(m_, 0);
  auto put_row = [&](int r, const Eigen::Ref<const Eigen::RowVectorXd>& a, double rhs) {
    double shift = 0.0;
    for (int j = 0; j < n_orig_; ++j) {
      const double aj = a[j];
      if (aj == 0.0) continue;
      const VarMap& v = vars_[j];
      switch (v.kind) {
        case VarKind::kShiftLower:
          rowsA(r, v.col) = aj;
          shift += aj * v.offset;
          break;
        case VarKind::kMirrorUpper:
          rowsA(r, v.col) = -aj;
          shift += aj * v.offset;
          break;
        case VarKind::kSplitFree:
          rowsA(r, v.col) = aj;
          rowsA(r, v.col + 1) = -aj;
          break;
      }
    }
    rowsb[r] = rhs - shift;
  };
  int r = 0;
  for (int bi = 0; bi < static_cast<int>(p_.equalities().size()); ++bi) {
    const auto& blk = p_.equalities()[bi];
    for (int i = 0; i < blk.b.size(); ++i, ++r) {
      put_row(r, blk.A.row(i), blk.b[i]);
      rows_.push_back({RowOrigin::kEq, bi, i, 1.0});
    }
  }
  for (int bi = 0; bi < static_cast<int>(p_.inequalities().size()); ++bi) {
    const auto& blk = p_.inequalities()[bi];
    for (int i = 0; i < blk.b.size(); ++i, ++r) {
      put_row(r, blk.A.row(i), blk.b[i]);
      rows_.push_back({RowOrigin::kIneq, bi, i, 1.0});
      is_ineq[r] = 1;
    }
  }
  for (int j : upper_rows) {
    rowsA(r, vars_[j].col) = 1.0;
    rowsb[r] = up[j] - lo[j];
    rows_.push_back({RowOrigin::kUpperBound, j, 0, 1.0});
    is_ineq[r] = 1;
    ++r;
  }

  // Row equilibration and sign normalization (b >= 0).
  for (int i = 0; i < m_; ++i) {
    double scale = rowsA.row(i).cwiseAbs().maxCoeff();
    if (scale < 1e-300) scale = 1.0;
    double f = 1.0 / scale;
    if (rowsb[i] < 0) f = -f;
    rowsA.row(i) *= f;
    rowsb[i] *= f;
    rows_[i].factor = f;
  }

  // Artificial for every equality row and every flipped inequality row.
  int n_art = 0;
  for (int i = 0; i < m_; ++i)
    if (!is_ineq[i] || rows_[i].factor < 0) ++n_art;
  n_cols_ = n_struct_ + n_slack + n_art;
  A_ = Mat::Zero(m_, n_cols_);
  A_.leftCols(n_struct_) = rowsA;
  b_ = rowsb;
  cost_ = Vec::Zero(n_cols_);
  is_artificial_.assign(n_cols_, 0);
  basis_.assign(m_, -1);
  where_.assign(n_cols_, -1);

  const Vec& c = p_.linear();
  for (int j = 0; j < n_orig_; ++j) {
    const VarMap& v = vars_[j];
    switch (v.kind) {
      case VarKind::kShiftLower: cost_[v.col] = c[j]; break;
      case VarKind::kMirrorUpper: cost_[v.col] = -c[j]; break;
      case VarKind::kSplitFree:
        cost_[v.col] = c[j];
        cost_[v.col + 1] = -c[j];
        break;
    }
  }

  int slack = n_struct_;
  int art = n_struct_ + n_slack;
  for (int i = 0; i < m_; ++i) {
    if (is_ineq[i]) {
      const double sigma = rows_[i].factor > 0 ? 1.0 : -1.0;
      A_(i, slack) = sigma;
      if (sigma > 0) {
        basis_[i] = slack;
        where_[slack] = i;
      }
      ++slack;
    }
    if (!is_ineq[i] || rows_[i].factor < 0) {
      A_(i, art) = 1.0;
      is_artificial_[art] = 1;
      basis_[i] = art;
      where_[art] = i;
      ++art;
    }
  }
}

void StandardForm::refactor() {
  Mat B(m_, m_);
  for (int i = 0; i < m_; ++i) B.col(i) = A_.col(basis_[i]);
  Eigen::PartialPivLU<Mat> lu(B);
  Binv_ = lu.inverse();
  since_refactor_ = 0;
  compute_basic_values();
}

void StandardForm::compute_basic_values() {
  xB_ = Binv_ * b_;
  for (int i = 0; i < m_; ++i)
    if (xB_[i] < 0 && xB_[i] > -1e-11) xB_[i] = 0.0;
}

void StandardForm::pivot(int leave_row, int enter_col, const Vec& alpha) {
  const double piv = alpha[leave_row];
  // Product-form update of the explicit inverse.
  Eigen::RowVectorXd prow = Binv_.row(leave_row) / piv;
  for (int i = 0; i < m_; ++i) {
    if (i == leave_row) continue;
    const double a = alpha[i];
    if (a != 0.0) Binv_.row(i) -= a * prow;
  }
  Binv_.row(leave_row) = prow;
  where_[basis_[leave_row]] = -1;
  basis_[leave_row] = enter_col;
  where_[enter_col] = leave_row;
  if (++since_refactor_ >= kRefactorEvery) {
    refactor();
  } else {
    compute_basic_values();
  }
}

// Runs simplex iterations for the given phase. Returns true when optimal.
bool StandardForm::iterate(bool phase_one, const SolverOptions& opt, int& iterations,
                           SolveStatus& status) {
  Vec cost(n_cols_);
  if (phase_one) {
    for (int j = 0; j < n_cols_; ++j) cost[j] = is_artificial_[j] ? 1.0 : 0.0;
  } else {
    cost = cost_;
  }
  // Per-column tolerance: scaling by the largest cost hides small but real
  // improvements on cheap columns.
  const double dtol = opt.optimality_tol;
  int degenerate_run = 0;
  Vec cB(m_);
  while (true) {
    if (iterations++ > opt.max_iterations) {
      status = SolveStatus::kNumericalFailure;
      return false;
    }
    for (int i = 0; i < m_; ++i) cB[i] = cost[basis_[i]];
    const Eigen::RowVectorXd y = cB.transpose() * Binv_;
    const bool bland = degenerate_run >= kDegenerateBeforeBland;
    int enter = -1;
    double best = 0.0;
    for (int j = 0; j < n_cols_; ++j) {
      if (where_[j] >= 0) continue;
      if (!phase_one && is_artificial_[j]) continue;
      const double d = cost[j] - y.dot(A_.col(j));
      if (d < -dtol * std::max(1.0, std::abs(cost[j])) && d < best) {
        enter = j;
        best = d;
        if (bland) break;
      }
    }
    if (enter < 0) return true;

    const Vec alpha = Binv_ * A_.col(enter);
    int leave = -1;
    double min_ratio = std::numeric_limits<double>::infinity();
    double leave_alpha = 0.0;
    for (int i = 0; i < m_; ++i) {
      const double a = alpha[i];
      double ratio;
      if (!phase_one && is_artificial_[basis_[i]] && std::abs(a) > kPivotTol) {
        ratio = 0.0;  // artificial stuck in the basis must stay at zero
      } else if (a > kPivotTol) {
        ratio = std::max(xB_[i], 0.0) / a;
      } else {
        continue;
      }
      const double aa = std::abs(a);
      bool take;
      if (ratio < min_ratio - 1e-12) {
        take = true;
      } else if (ratio <= min_ratio + 1e-12) {
        take = bland ? basis_[i] < basis_[leave] : aa > leave_alpha;
      } else {
        take = false;
      }
      if (take) {
        min_ratio = ratio;
        leave = i;
        leave_alpha = aa;
      }
    }
    if (leave < 0) {
      status = SolveStatus::kUnbounded;
      return false;
    }
    degenerate_run = (min_ratio <= 1e-12) ? degenerate_run + 1 : 0;
    pivot(leave, enter, alpha);
  }
}

SolveResult StandardForm::run(const SolverOptions& opt) {
  SolveResult res;
  const int n = n_orig_;
  if (m_ == 0) {
    // Only bounds: each variable sits at its cost-minimizing bound.
    res.primal = Vec::Zero(n);
    const Vec& c = p_.linear();
    for (int j = 0; j < n; ++j) {
      if (c[j] > 0) {
        if (!is_finite_bound(p_.lower()[j])) { res.status = SolveStatus::kUnbounded; return res; }
        res.primal[j] = p_.lower()[j];
      } else if (c[j] < 0) {
        if (!is_finite_bound(p_.upper()[j])) { res.status = SolveStatus::kUnbounded; return res; }
        res.primal[j] = p_.upper()[j];
      } else {
        res.primal[j] = is_finite_bound(p_.lower()[j]) ? p_.lower()[j]
                        : is_finite_bound(p_.upper()[j]) ? p_.upper()[j] : 0.0;
      }
    }
    res.duals[kLowerBoundLabel] = c.cwiseMax(0.0);
    res.duals[kUpperBoundLabel] = (-c).cwiseMax(0.0);
    res.objective = c.dot(res.primal);
    res.status = SolveStatus::kOptimal;
    return res;
  }

  refactor();
  int iterations = 0;
  SolveStatus status = SolveStatus::kOptimal;
  bool any_art = false;
  for (int j = 0; j < n_cols_; ++j) any_art |= is_artificial_[j] && where_[j] >= 0;
  if (any_art) {
    if (!iterate(true, opt, iterations, status)) {
      res.status = status == SolveStatus::kUnbounded ? SolveStatus::kNumericalFailure : status;
      res.diagnostics = "simplex phase one did not terminate";
      return res;
    }
    refactor();
    double infeas = 0.0;
    for (int i = 0; i < m_; ++i)
      if (is_artificial_[basis_[i]]) infeas += std::max(xB_[i], 0.0);
    if (infeas > opt.feasibility_tol * std::max(1.0, b_.cwiseAbs().maxCoeff())) {
      res.status = SolveStatus::kInfeasible;
      res.diagnostics = "phase one residual " + std::to_string(infeas);
      return res;
    }
    // Drive zero-level artificials out of the basis where a pivot exists.
    for (int i = 0; i < m_; ++i) {
      if (!is_artificial_[basis_[i]]) continue;
      const Eigen::RowVectorXd brow = Binv_.row(i);
      int best = -1;
      double best_abs = 1e-7;
      for (int j = 0; j < n_cols_; ++j) {
        if (where_[j] >= 0 || is_artificial_[j]) continue;
        const double a = std::abs(brow.dot(A_.col(j)));
        if (a > best_abs) {
          best_abs = a;
          best = j;
        }
      }
      if (best >= 0) {
        const Vec alpha = Binv_ * A_.col(best);
        pivot(i, best, alpha);
      }
    }
  }
  if (!iterate(false, opt, iterations, status)) {
    res.status = status;
    res.diagnostics = status == SolveStatus::kUnbounded ? "objective unbounded below"
                                                        : "iteration limit";
    return res;
  }
  refactor();

  // Primal recovery.
  Vec xs = Vec::Zero(n_cols_);
  for (int i = 0; i < m_; ++i) xs[basis_[i]] = std::max(xB_[i], 0.0);
  Vec x(n);
  for (int j = 0; j < n; ++j) {
    const VarMap& v = vars_[j];
    switch (v.kind) {
      case VarKind::kShiftLower: x[j] = v.offset + xs[v.col]; break;
      case VarKind::kMirrorUpper: x[j] = v.offset - xs[v.col]; break;
      case VarKind::kSplitFree: x[j] = xs[v.col] - xs[v.col + 1]; break;
    }
  }

  // Dual recovery: pi = cB' Binv, original multiplier = -pi * factor.
  Vec cB(m_);
  for (int i = 0; i < m_; ++i) cB[i] = cost_[basis_[i]];
  const Vec pi = (cB.transpose() * Binv_).transpose();
  for (const auto& blk : p_.equalities()) res.duals[blk.label] = Vec::Zero(blk.b.size());
  for (const auto& blk : p_.inequalities()) res.duals[blk.label] = Vec::Zero(blk.b.size());
  Vec mu_lo = Vec::Zero(n), mu_up = Vec::Zero(n);
  for (int i = 0; i < m_; ++i) {
    const RowOrigin& o = rows_[i];
    const double val = -pi[i] * o.factor;
    switch (o.kind) {
      case RowOrigin::kEq: res.duals[p_.equalities()[o.block].label][o.row] = val; break;
      case RowOrigin::kIneq:
        res.duals[p_.inequalities()[o.block].label][o.row] = std::max(val, 0.0);
        break;
      case RowOrigin::kUpperBound: mu_up[o.block] = std::max(val, 0.0); break;
    }
  }
  // Bound multipliers from reduced costs of the structural columns.
  for (int j = 0; j < n; ++j) {
    const VarMap& v = vars_[j];
    if (v.kind == VarKind::kSplitFree) continue;
    const double d = cost_[v.col] - pi.dot(A_.col(v.col));
    if (v.kind == VarKind::kShiftLower)
      mu_lo[j] = std::max(d, 0.0);
    else
      mu_up[j] = std::max(d, 0.0);
  }
  res.duals[kLowerBoundLabel] = mu_lo;
  res.duals[kUpperBoundLabel] = mu_up;
  res.primal = x;
  res.objective = p_.linear().dot(x);
  res.status = SolveStatus::kOptimal;
  res.diagnostics = "simplex iterations " + std::to_string(iterations);
  return res;
}

}  // namespace

SolveResult solve_lp_simplex(const ConvexProgram& program, const SolverOptions& options) {
  StandardForm sf(program);
  return sf.run(options);
}

}  // namespace lmpc::solver::detail
