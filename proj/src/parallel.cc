#include "lmpc/parallel.h"

#include <cstdlib>

namespace lmpc {

int worker_count() {
  if (const char* env = std::getenv("LMPC_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace lmpc
