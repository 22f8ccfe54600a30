#pragma once

// Coset partitions {H_i a_i} of F_n and their exact verification.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hsgon/schreier.hpp"
#include "hsgon/words.hpp"

namespace hsgon {

inline constexpr std::uint64_t kDefaultStateGuard = 10'000'000;

// The Schreier automaton of H.rep: start at the base, accept at base.rep.
struct CosetPart {
  SchreierGraph graph;
  FreeWord rep;
  Vertex accept = 0;
  std::size_t index = 1;  // d_i
  unsigned period = 1;    // h_i
  unsigned offset = 0;    // m_i, shortest positive word into the coset

  bool contains(const FreeWord& w) const { return walk(graph, graph.base(), w) == accept; }
};

CosetPart make_part(SchreierGraph graph, FreeWord rep);

// A validated partition, parts sorted by index (stable).
class CosetPartition {
 public:
  const std::vector<CosetPart>& parts() const noexcept { return parts_; }
  const Alphabet& alphabet() const noexcept { return parts_.front().graph.alphabet(); }
  std::size_t rank() const noexcept { return alphabet().rank(); }
  std::size_t size() const noexcept { return parts_.size(); }

 private:
  explicit CosetPartition(std::vector<CosetPart> parts) : parts_(std::move(parts)) {}
  std::vector<CosetPart> parts_;

  friend CosetPartition verify_partition(std::vector<CosetPart>, std::uint64_t);
};

bool disjoint(const CosetPart& p, const CosetPart& q);

// A reachable tuple of part states, with a word reaching it.
struct OrbitWitness {
  std::vector<Vertex> states;  // one vertex per part
  FreeWord word;
};

// Explores the simultaneous action on all parts; returns a word lying in no
// part, or nothing if the parts cover F_n. Parts sharing a graph share one
// coordinate, and `guard` bounds the number of visited tuples
// (StateSpaceTooLarge beyond it).
std::optional<OrbitWitness> find_uncovered(std::span<const CosetPart> parts,
                                           std::uint64_t guard = kDefaultStateGuard);

bool covers(std::span<const CosetPart> parts, std::uint64_t guard = kDefaultStateGuard);

// True iff the children are pairwise disjoint and their union is the coset
// of `parent`.
bool refines(const CosetPart& parent, std::span<const CosetPart> children,
             std::uint64_t guard = kDefaultStateGuard);

// Throws, in this order of checks, IndexOne, DensityMismatch, NotCovering
// (witness tuple in Error::info, in the input order) or NotDisjoint(i, j).
CosetPartition verify_partition(std::vector<CosetPart> parts,
                                std::uint64_t guard = kDefaultStateGuard);

struct WordCensus {
  // counts[i][k]: positive words of length k in part i.
  std::vector<std::vector<std::uint64_t>> counts;
};

// Enumerates all positive words up to length k_max; every word must lie in
// exactly one part. Guard: n^k_max <= guard.
WordCensus word_census(const CosetPartition& partition, unsigned k_max,
                       std::uint64_t guard = kDefaultStateGuard);

}  // namespace hsgon
