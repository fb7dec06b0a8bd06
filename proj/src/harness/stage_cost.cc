#include "lmpc/harness/stage_cost.h"

namespace lmpc::harness {

double stage_cost(const Vec& x, const Vec& u, const geometry::Polytope& O,
                  const geometry::Polytope& KO) {
  return geometry::squared_distance(O, x) + geometry::squared_distance(KO, u);
}

}  // namespace lmpc::harness
