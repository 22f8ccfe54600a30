#pragma once

// Schreier graphs of finite-index subgroups H < F_n.
//
// Vertices are the right cosets of H. For each generator x the graph holds
// the permutation v -> v.x; the base vertex 0 is H itself. Every graph is
// stored in canonical numbering: base = 0, remaining vertices in BFS order
// over generator edges with alphabet order as the tie-break. Two based
// graphs are isomorphic iff they compare equal.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hsgon/matrix.hpp"
#include "hsgon/words.hpp"

namespace hsgon {

using Vertex = std::uint32_t;
using Permutation = std::vector<Vertex>;

class SchreierGraph {
 public:
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t rank() const noexcept { return alphabet_.rank(); }
  std::size_t index() const noexcept { return succ_.front().size(); }
  Vertex base() const noexcept { return 0; }

  Vertex succ(std::size_t generator, Vertex v) const { return succ_[generator][v]; }
  Vertex pred(std::size_t generator, Vertex v) const { return pred_[generator][v]; }
  // Follows a signed letter.
  Vertex step(Vertex v, Letter x) const {
    return x > 0 ? succ_[static_cast<std::size_t>(x - 1)][v]
                 : pred_[static_cast<std::size_t>(-x - 1)][v];
  }

  const std::vector<Permutation>& action() const noexcept { return succ_; }

  bool operator==(const SchreierGraph& other) const {
    return alphabet_ == other.alphabet_ && succ_ == other.succ_;
  }

 private:
  SchreierGraph(Alphabet alphabet, std::vector<Permutation> succ);

  Alphabet alphabet_;
  std::vector<Permutation> succ_;
  std::vector<Permutation> pred_;

  friend SchreierGraph from_action(const Alphabet&, std::vector<Permutation>, Vertex);
};

// Stallings folding of the wedge of generator loops. Throws InfiniteIndex
// when the folded graph is not complete.
SchreierGraph fold(std::span<const FreeWord> generators, const Alphabet& alphabet);

// Graph of the stabilizer of `base` under a transitive permutation action.
// Throws NotPermutation or NotTransitive.
SchreierGraph from_action(const Alphabet& alphabet, std::vector<Permutation> permutations,
                          Vertex base);

// Vertex reached from `start` by reading `w`; walk(g, base, w) == base iff w in H.
Vertex walk(const SchreierGraph& g, Vertex start, const FreeWord& w);

// Entry (i, j) counts generators x with i.x = j.
IntMatrix transition_matrix(const SchreierGraph& g);

// gcd of directed cycle lengths.
unsigned period(const SchreierGraph& g);

// Length of a shortest directed path (generator edges only) from i to j.
unsigned min_positive_distance(const SchreierGraph& g, Vertex i, Vertex j);
std::vector<unsigned> positive_distances(const SchreierGraph& g, Vertex from);

// A shortest positive word labelling a path from `from` to each vertex.
std::vector<FreeWord> positive_paths(const SchreierGraph& g, Vertex from);

struct SpectralSummary {
  std::int64_t lambda_pf = 0;
  unsigned period = 1;
  std::vector<Rational> right_eigenvector;  // all ones
  std::vector<Rational> left_eigenvector;   // all 1/d
  Matrix<Rational> limit;                   // v_R v_L, all entries 1/d
};

SpectralSummary spectral_summary(const SchreierGraph& g);

enum class CesaroMode {
  Average,  // (1/(k+1)) sum_{m<=k} A^m / n^m
  Plain,    // A^k / n^k, meaningful for aperiodic graphs
};

// True iff the chosen average of A^m / n^m up to k_max is entrywise within
// `tol` of the all-(1/d) matrix. Floating point; never used for verdicts.
bool cesaro_check(const SchreierGraph& g, unsigned k_max, double tol,
                  CesaroMode mode = CesaroMode::Average);

}  // namespace hsgon
