#include "lmpc/solver/convex_program.h"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <sstream>

#include "backends.h"
#include "lmpc/io/number_format.h"

namespace lmpc::solver {

ConvexProgram::ConvexProgram(int num_variables)
    : n_(num_variables),
      c_(Vec::Zero(num_variables)),
      lower_(Vec::Constant(num_variables, -std::numeric_limits<double>::infinity())),
      upper_(Vec::Constant(num_variables, std::numeric_limits<double>::infinity())) {
  if (num_variables <= 0) throw std::invalid_argument("ConvexProgram: need at least one variable");
}

void ConvexProgram::set_quadratic(const Mat& P) {
  if (P.rows() != n_ || P.cols() != n_) throw std::invalid_argument("quadratic term has wrong shape");
  if ((P - P.transpose()).cwiseAbs().maxCoeff() > 1e-9)
    throw std::invalid_argument("quadratic term is not symmetric");
  Eigen::SelfAdjointEigenSolver<Mat> es(P, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-9) throw std::invalid_argument("quadratic term is not PSD");
  P_ = P;
}

void ConvexProgram::set_linear(const Vec& c) {
  if (c.size() != n_) throw std::invalid_argument("linear term has wrong size");
  c_ = c;
}

void ConvexProgram::set_bounds(const Vec& lower, const Vec& upper) {
  if (lower.size() != n_ || upper.size() != n_) throw std::invalid_argument("bounds have wrong size");
  lower_ = lower;
  upper_ = upper;
}

void ConvexProgram::set_lower_bound(int index, double value) { lower_[index] = value; }
void ConvexProgram::set_upper_bound(int index, double value) { upper_[index] = value; }

void ConvexProgram::check_label(const std::string& label) const {
  if (label == kLowerBoundLabel || label == kUpperBoundLabel)
    throw std::invalid_argument("reserved block label: " + label);
  for (const auto& b : eq_)
    if (b.label == label) throw std::invalid_argument("duplicate block label: " + label);
  for (const auto& b : in_)
    if (b.label == label) throw std::invalid_argument("duplicate block label: " + label);
}

void ConvexProgram::add_equality(const std::string& label, const Mat& A, const Vec& b) {
  check_label(label);
  if (A.cols() != n_ || A.rows() != b.size()) throw std::invalid_argument("equality block shape: " + label);
  eq_.push_back({label, A, b});
}

void ConvexProgram::add_inequality(const std::string& label, const Mat& A, const Vec& b) {
  check_label(label);
  if (A.cols() != n_ || A.rows() != b.size()) throw std::invalid_argument("inequality block shape: " + label);
  in_.push_back({label, A, b});
}

double ConvexProgram::objective(const Vec& x) const {
  double v = c_.dot(x);
  if (P_) v += 0.5 * x.dot(*P_ * x);
  return v;
}

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal: return "optimal";
    case SolveStatus::kInfeasible: return "infeasible";
    case SolveStatus::kUnbounded: return "unbounded";
    case SolveStatus::kNumericalFailure: return "numerical-failure";
  }
  return "unknown";
}

const Vec& SolveResult::dual(const std::string& label) const {
  auto it = duals.find(label);
  if (it == duals.end()) throw SolverError("no dual for block '" + label + "'");
  return it->second;
}

int verbosity() {
  const char* v = std::getenv("LMPC_SOLVER_VERBOSE");
  return v ? std::atoi(v) : 0;
}

KktResiduals kkt_residuals(const ConvexProgram& p, const SolveResult& r) {
  KktResiduals k;
  const Vec& x = r.primal;
  Vec grad = p.linear();
  if (p.has_quadratic()) grad += p.quadratic() * x;
  for (const auto& blk : p.equalities()) {
    const Vec res = blk.A * x - blk.b;
    if (res.size()) k.primal = std::max(k.primal, res.cwiseAbs().maxCoeff());
    grad += blk.A.transpose() * r.dual(blk.label);
  }
  for (const auto& blk : p.inequalities()) {
    const Vec& z = r.dual(blk.label);
    const Vec slack = blk.b - blk.A * x;
    if (slack.size()) {
      k.primal = std::max(k.primal, (-slack).maxCoeff());
      k.dual_sign = std::max(k.dual_sign, (-z).maxCoeff());
      k.complementarity = std::max(k.complementarity, (z.cwiseProduct(slack)).cwiseAbs().maxCoeff());
    }
    grad += blk.A.transpose() * z;
  }
  const Vec& lo = r.dual(kLowerBoundLabel);
  const Vec& up = r.dual(kUpperBoundLabel);
  grad += up - lo;
  for (int j = 0; j < p.num_variables(); ++j) {
    if (detail::is_finite_bound(p.lower()[j])) {
      k.primal = std::max(k.primal, p.lower()[j] - x[j]);
      k.complementarity = std::max(k.complementarity, std::abs(lo[j] * (x[j] - p.lower()[j])));
    }
    if (detail::is_finite_bound(p.upper()[j])) {
      k.primal = std::max(k.primal, x[j] - p.upper()[j]);
      k.complementarity = std::max(k.complementarity, std::abs(up[j] * (p.upper()[j] - x[j])));
    }
  }
  k.dual_sign = std::max({k.dual_sign, (-lo).maxCoeff(), (-up).maxCoeff()});
  k.primal = std::max(k.primal, 0.0);
  k.stationarity = grad.cwiseAbs().maxCoeff();
  return k;
}

namespace {

void debug_check(const ConvexProgram& p, const SolveResult& r) {
  const KktResiduals k = kkt_residuals(p, r);
  if (!p.has_quadratic()) {
    // Weak duality: the dual objective of an LP never exceeds the primal one.
    double dual_obj = 0.0;
    for (const auto& blk : p.equalities()) dual_obj -= blk.b.dot(r.dual(blk.label));
    for (const auto& blk : p.inequalities()) dual_obj -= blk.b.dot(r.dual(blk.label));
    for (int j = 0; j < p.num_variables(); ++j) {
      if (detail::is_finite_bound(p.lower()[j])) dual_obj += p.lower()[j] * r.dual(kLowerBoundLabel)[j];
      if (detail::is_finite_bound(p.upper()[j])) dual_obj -= p.upper()[j] * r.dual(kUpperBoundLabel)[j];
    }
    if (dual_obj > r.objective + 1e-6 * (1.0 + std::abs(r.objective)))
      throw SolverError("weak duality violated: dual " + std::to_string(dual_obj) + " > primal " +
                        std::to_string(r.objective));
  } else if (k.complementarity > 1e-6) {
    throw SolverError("complementary slackness residual " + std::to_string(k.complementarity));
  }
  if (k.primal > 1e-6 || k.stationarity > 1e-6)
    throw SolverError("KKT residuals too large: primal " + std::to_string(k.primal) +
                      ", stationarity " + std::to_string(k.stationarity));
}

}  // namespace

SolveResult solve(const ConvexProgram& program, const SolverOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  bool use_prox = program.has_quadratic();
  if (options.backend == Backend::kProxQp) use_prox = true;
  if (options.backend == Backend::kSimplex && program.has_quadratic())
    throw std::invalid_argument("simplex backend cannot solve a QP");
  SolveResult r = use_prox ? detail::solve_qp_prox(program, options)
                           : detail::solve_lp_simplex(program, options);
  r.solve_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.optimal() && options.debug_checks) debug_check(program, r);
  if (verbosity() >= 1 && !r.optimal())
    std::cerr << "[solver] " << to_string(r.status) << ": " << r.diagnostics << "\n";
  return r;
}

// Format:
//   program <n>
//   quadratic            (optional, n rows)
//   linear <n values>
//   bounds               (two rows: lower, upper; inf spelled "inf")
//   eq <label> <rows>    followed by rows of "a_1 .. a_n b"
//   ineq <label> <rows>
std::string dump_program(const ConvexProgram& p) {
  std::ostringstream os;
  const int n = p.num_variables();
  os << "program " << n << "\n";
  if (p.has_quadratic()) {
    os << "quadratic\n";
    for (int i = 0; i < n; ++i) os << io::format_row(p.quadratic().row(i).transpose()) << "\n";
  }
  os << "linear " << io::format_row(p.linear()) << "\n";
  os << "bounds\n" << io::format_row(p.lower()) << "\n" << io::format_row(p.upper()) << "\n";
  auto blocks = [&](const char* tag, const std::vector<ConstraintBlock>& bl) {
    for (const auto& b : bl) {
      os << tag << " " << b.label << " " << b.b.size() << "\n";
      for (int i = 0; i < b.b.size(); ++i) {
        Vec row(n + 1);
        row << b.A.row(i).transpose(), b.b[i];
        os << io::format_row(row) << "\n";
      }
    }
  };
  blocks("eq", p.equalities());
  blocks("ineq", p.inequalities());
  return os.str();
}

ConvexProgram parse_program(const std::string& text) {
  std::istringstream is(text);
  std::string tag;
  int n = 0;
  is >> tag >> n;
  if (tag != "program" || n <= 0) throw std::invalid_argument("not a program dump");
  ConvexProgram p(n);
  auto read_vec = [&](int k) {
    Vec v(k);
    for (int i = 0; i < k; ++i) {
      std::string s;
      is >> s;
      v[i] = io::parse_number(s);
    }
    return v;
  };
  while (is >> tag) {
    if (tag == "quadratic") {
      Mat P(n, n);
      for (int i = 0; i < n; ++i) P.row(i) = read_vec(n).transpose();
      p.set_quadratic(P);
    } else if (tag == "linear") {
      p.set_linear(read_vec(n));
    } else if (tag == "bounds") {
      Vec lo = read_vec(n);
      Vec up = read_vec(n);
      p.set_bounds(lo, up);
    } else if (tag == "eq" || tag == "ineq") {
      std::string label;
      int rows = 0;
      is >> label >> rows;
      Mat A(rows, n);
      Vec b(rows);
      for (int i = 0; i < rows; ++i) {
        Vec row = read_vec(n + 1);
        A.row(i) = row.head(n).transpose();
        b[i] = row[n];
      }
      if (tag == "eq") p.add_equality(label, A, b); else p.add_inequality(label, A, b);
    } else {
      throw std::invalid_argument("unknown program section: " + tag);
    }
  }
  return p;
}

}  // namespace lmpc::solver
