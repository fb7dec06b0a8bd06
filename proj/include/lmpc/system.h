#pragma once

#include "lmpc/common.h"
#include "lmpc/geometry/polytope.h"

namespace lmpc {

/// x+ = A x + B u + w.
struct LinearSystem {
  Mat A;
  Mat B;

  int nx() const { return static_cast<int>(A.rows()); }
  int nu() const { return static_cast<int>(B.cols()); }
  Vec step(const Vec& x, const Vec& u, const Vec& w) const { return A * x + B * u + w; }
  Vec nominal(const Vec& x, const Vec& u) const { return A * x + B * u; }
};

/// Everything a controller needs to know about the task: dynamics, the
/// constraint and disturbance sets, the terminal feedback and its target set.
struct ControlProblem {
  LinearSystem sys;
  geometry::Polytope X;   // state constraints
  geometry::Polytope U;   // input constraints
  geometry::Polytope W;   // disturbance support
  Mat K;                  // terminal feedback u = K x
  geometry::Polytope O;   // target set (RPI under K)
  geometry::Polytope KO;  // image of O under K
};

}  // namespace lmpc
