#include "lmpc/solver/convex_program.h"

#include <random>

#include <gtest/gtest.h>

namespace lmpc::solver {
namespace {

TEST(Solver, ScalarQpWithLowerBound) {
  // min x^2 s.t. x >= 1, written as -x <= -1.
  ConvexProgram p(1);
  p.set_quadratic(Mat::Constant(1, 1, 2.0));
  p.add_inequality("x_ge_1", Mat::Constant(1, 1, -1.0), Vec::Constant(1, -1.0));
  const SolveResult r = solve(p);
  ASSERT_TRUE(r.optimal());
  EXPECT_NEAR(r.primal[0], 1.0, 1e-7);
  EXPECT_NEAR(r.dual("x_ge_1")[0], 2.0, 1e-6);
  EXPECT_NEAR(r.objective, 1.0, 1e-7);
}

TEST(Solver, ConvexCombinationLpAtStoredColumn) {
  Mat X(2, 4);
  X << 0, 1, 0, 1,
       0, 0, 1, 1;
  Vec J(4);
  J << 0.0, 2.0, 3.0, 7.0;
  ConvexProgram p(4);
  p.set_linear(J);
  p.set_bounds(Vec::Zero(4), Vec::Constant(4, std::numeric_limits<double>::infinity()));
  p.add_equality("state", X, X.col(3));
  p.add_equality("sum", Mat::Ones(1, 4), Vec::Ones(1));
  const SolveResult r = solve(p);
  ASSERT_TRUE(r.optimal());
  EXPECT_LE(r.objective, J[3] + 1e-12);
  // (1,1) = (1,0) + (0,1) - (0,0) is not convex; cheapest is 0.5*(1,0)+0.5*(0,1)? no:
  // any convex combination reaching (1,1) must put all weight on column 3.
  EXPECT_NEAR(r.objective, 7.0, 1e-9);
}

TEST(Solver, InfeasibleBox) {
  ConvexProgram p(1);
  p.set_linear(Vec::Ones(1));
  Mat A(2, 1);
  A << 1, -1;
  Vec b(2);
  b << 0, -1;  // x <= 0 and x >= 1
  p.add_inequality("box", A, b);
  EXPECT_EQ(solve(p).status, SolveStatus::kInfeasible);
  SolverOptions o;
  o.backend = Backend::kProxQp;
  p.set_quadratic(Mat::Identity(1, 1));
  EXPECT_EQ(solve(p, o).status, SolveStatus::kInfeasible);
}

TEST(Solver, UnboundedLp) {
  ConvexProgram p(2);
  p.set_linear(Vec::Constant(2, -1.0));
  p.add_inequality("x0", (Mat(1, 2) << 1, 0).finished(), Vec::Ones(1));
  EXPECT_EQ(solve(p).status, SolveStatus::kUnbounded);
}

TEST(Solver, BoundOnlyLp) {
  ConvexProgram p(2);
  p.set_linear((Vec(2) << 1, -2).finished());
  p.set_bounds((Vec(2) << -1, -3).finished(), (Vec(2) << 4, 5).finished());
  const SolveResult r = solve(p);
  ASSERT_TRUE(r.optimal());
  EXPECT_DOUBLE_EQ(r.primal[0], -1.0);
  EXPECT_DOUBLE_EQ(r.primal[1], 5.0);
}

TEST(Solver, DuplicateAndReservedLabelsRejected) {
  ConvexProgram p(1);
  p.add_equality("a", Mat::Ones(1, 1), Vec::Ones(1));
  EXPECT_THROW(p.add_inequality("a", Mat::Ones(1, 1), Vec::Ones(1)), std::invalid_argument);
  EXPECT_THROW(p.add_inequality(kLowerBoundLabel, Mat::Ones(1, 1), Vec::Ones(1)), std::invalid_argument);
}

TEST(Solver, NonPsdQuadraticRejected) {
  ConvexProgram p(2);
  EXPECT_THROW(p.set_quadratic(Mat::Identity(2, 2) * -1.0), std::invalid_argument);
}

// Random feasible bounded LPs: simplex and ProxQP must agree on the optimal
// value and both must satisfy KKT at 1e-6.
TEST(Solver, RandomLpsAgreeAcrossBackends) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + trial % 5;
    const int m_in = 2 * n + trial % 3;
    const int m_eq = trial % 2;
    const Vec x0 = Vec::NullaryExpr(n, [&] { return g(rng); });
    ConvexProgram p(n);
    p.set_linear(Vec::NullaryExpr(n, [&] { return g(rng); }));
    Mat A = Mat::NullaryExpr(m_in, n, [&] { return g(rng); });
    Vec b = A * x0 + Vec::NullaryExpr(m_in, [&] { return std::abs(g(rng)); });
    p.add_inequality("rows", A, b);
    if (m_eq) {
      Mat E = Mat::NullaryExpr(1, n, [&] { return g(rng); });
      p.add_equality("eq", E, E * x0);
    }
    p.set_bounds(Vec::Constant(n, -20.0), Vec::Constant(n, 20.0));
    const SolveResult s = solve(p);
    SolverOptions o;
    o.backend = Backend::kProxQp;
    const SolveResult q = solve(p, o);
    ASSERT_TRUE(s.optimal()) << trial;
    ASSERT_TRUE(q.optimal()) << trial;
    EXPECT_NEAR(s.objective, q.objective, 1e-6 * (1 + std::abs(s.objective))) << trial;
    const KktResiduals ks = kkt_residuals(p, s);
    EXPECT_LT(ks.primal, 1e-6);
    EXPECT_LT(ks.stationarity, 1e-6);
    EXPECT_LT(ks.dual_sign, 1e-8);
    EXPECT_LT(ks.complementarity, 1e-6);
  }
}

TEST(Solver, RandomQpsSatisfyKkt) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 6;
    Mat L = Mat::NullaryExpr(n, n, [&] { return g(rng); });
    ConvexProgram p(n);
    p.set_quadratic(L * L.transpose() + 0.1 * Mat::Identity(n, n));
    p.set_linear(Vec::NullaryExpr(n, [&] { return g(rng); }));
    Mat A = Mat::NullaryExpr(2 * n, n, [&] { return g(rng); });
    p.add_inequality("rows", A, Vec::Ones(2 * n));
    SolverOptions o;
    o.debug_checks = true;
    const SolveResult r = solve(p, o);
    ASSERT_TRUE(r.optimal());
    const KktResiduals k = kkt_residuals(p, r);
    EXPECT_LT(k.stationarity, 1e-6);
    EXPECT_LT(k.complementarity, 1e-6);
  }
}

TEST(Solver, DegenerateLpTerminates) {
  // Many redundant constraints through the optimum (classic cycling bait).
  const int n = 4;
  ConvexProgram p(n);
  p.set_linear(-Vec::Ones(n));
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.1, 1.0);
  Mat A(30, n);
  for (int i = 0; i < 30; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = u(rng);
  Vec b = A * Vec::Ones(n);  // all rows tight at x = 1
  p.add_inequality("rows", A, b);
  p.set_bounds(Vec::Zero(n), Vec::Constant(n, 1e30));
  SolverOptions o;
  o.debug_checks = true;
  const SolveResult r = solve(p, o);
  ASSERT_TRUE(r.optimal());
  EXPECT_LE(r.objective, -static_cast<double>(n) + 1e-9);
}

TEST(Solver, DumpRoundTrip) {
  ConvexProgram p(2);
  p.set_quadratic((Mat(2, 2) << 2, 0.1, 0.1, 1).finished());
  p.set_linear((Vec(2) << 0.3, -1.0 / 3.0).finished());
  p.set_lower_bound(0, -1.5);
  p.add_equality("e", (Mat(1, 2) << 1, 1).finished(), Vec::Constant(1, 0.7));
  p.add_inequality("i", (Mat(1, 2) << 1, -1).finished(), Vec::Constant(1, 0.1));
  const std::string text = dump_program(p);
  const ConvexProgram q = parse_program(text);
  EXPECT_EQ(dump_program(q), text);
  EXPECT_EQ(q.linear()[1], -1.0 / 3.0);
}

}  // namespace
}  // namespace lmpc::solver
