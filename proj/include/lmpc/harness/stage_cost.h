#pragma once

#include "lmpc/common.h"
#include "lmpc/geometry/polytope.h"

namespace lmpc::harness {

/// Squared distance of x to O plus squared distance of u to KO. Zero exactly
/// on O x KO.
double stage_cost(const Vec& x, const Vec& u, const geometry::Polytope& O,
                  const geometry::Polytope& KO);

}  // namespace lmpc::harness
