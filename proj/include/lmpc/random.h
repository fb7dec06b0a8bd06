#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace lmpc {

using Rng = std::mt19937_64;

/// Independent, reproducible stream for (seed, tag...). Streams with
/// different tags do not overlap in practice and do not depend on call order.
inline Rng make_rng(uint64_t seed, std::initializer_list<uint64_t> tags = {}) {
  std::vector<uint32_t> words = {static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32)};
  for (uint64_t t : tags) {
    words.push_back(static_cast<uint32_t>(t));
    words.push_back(static_cast<uint32_t>(t >> 32));
  }
  std::seed_seq seq(words.begin(), words.end());
  return Rng(seq);
}

// Stream tags used across the library.
enum StreamTag : uint64_t {
  kStreamSamples = 1,
  kStreamWeights = 2,
  kStreamDelta = 3,
  kStreamClosedLoop = 4,
  kStreamExploration = 5,
  kStreamProperty = 6,
};

}  // namespace lmpc
