#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace lmpc {

/// Number of worker threads; LMPC_THREADS overrides the hardware count.
int worker_count();

/// Runs f(i) for i in [0, n). Work is split into contiguous chunks, so f must
/// only write to slots owned by i; results are then independent of the thread
/// count. The first exception thrown by any f(i) is rethrown.
template <typename F>
void parallel_for(int n, F&& f) {
  const int workers = std::min(worker_count(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const int lo = static_cast<int>(static_cast<long>(n) * w / workers);
      const int hi = static_cast<int>(static_cast<long>(n) * (w + 1) / workers);
      try {
        for (int i = lo; i < hi; ++i) f(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace lmpc
