#pragma once

// Seeded random coset partitions of F_n by iterated refinement: a part H.a
// is replaced by the cosets K.u_k.a of a random finite-index K < H read off a
// permutation lift of the Schreier graph of H.
//
// Randomness comes from std::mt19937_64; bounded integers are drawn by
// rejection from its raw 64-bit output so results do not depend on the
// standard library's distribution implementations.

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "hsgon/partition.hpp"

namespace hsgon {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  // Uniform on [0, bound); bound > 0.
  std::uint64_t uniform_below(std::uint64_t bound);
  // Uniformly random permutation of {0, ..., m - 1} (Fisher-Yates).
  std::vector<Vertex> permutation(std::size_t m);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

struct GenConfig {
  std::size_t rank = 2;
  std::uint64_t seed = 0;
  unsigned depth = 2;
  // (degree, weight) pairs for the lift degree.
  std::vector<std::pair<unsigned, unsigned>> degrees{{2, 3}, {3, 2}, {4, 1}};
  // Largest index a part may reach.
  std::size_t guard = 256;
  // Percentage of lifts drawn coherently: one permutation per vertex shared
  // by all generators instead of one per edge. 0 gives the plain uniform
  // lift; larger values make long periods far more common.
  unsigned coherent_percent = 0;
  // Resamples of a disconnected lift before giving up.
  unsigned max_retries = 64;
  std::uint64_t state_guard = kDefaultStateGuard;
};

// Throws InvalidArgument, GuardExceeded or RetriesExhausted.
CosetPartition generate(const GenConfig& config);

// Largest period among the parts.
unsigned max_period(const CosetPartition& partition);

// Retries generate() with seeds derived from config.seed until the largest
// period is target_h. Throws InvalidArgument for target_h < 2 and
// BudgetExhausted after `budget` attempts.
CosetPartition generate_with_period(const GenConfig& config, unsigned target_h,
                                    std::size_t budget = 2000);

}  // namespace hsgon
