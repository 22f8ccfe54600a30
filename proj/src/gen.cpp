#include "hsgon/gen.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>

#include "hsgon/error.hpp"

namespace hsgon {

std::uint64_t Rng::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::InvalidArgument, "uniform_below(0)");
  // Largest multiple of bound representable, to reject the biased tail.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::vector<Vertex> Rng::permutation(std::size_t m) {
  std::vector<Vertex> p(m);
  for (std::size_t i = 0; i < m; ++i) p[i] = static_cast<Vertex>(i);
  for (std::size_t i = m; i > 1; --i) std::swap(p[i - 1], p[uniform_below(i)]);
  return p;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

namespace {

void validate(const GenConfig& c) {
  if (c.rank < 2 || c.rank > 26) throw Error(ErrorCode::InvalidArgument, "rank must be in [2, 26]");
  if (c.depth < 1) throw Error(ErrorCode::InvalidArgument, "depth must be >= 1");
  if (c.degrees.empty()) throw Error(ErrorCode::InvalidArgument, "no lift degrees given");
  for (auto [d, w] : c.degrees)
    if (d < 2 || w == 0) throw Error(ErrorCode::InvalidArgument, "lift degrees must be >= 2 with positive weight");
  if (c.coherent_percent > 100) throw Error(ErrorCode::InvalidArgument, "coherent_percent must be <= 100");
}

unsigned pick_degree(Rng& rng, const GenConfig& c) {
  std::uint64_t total = 0;
  for (auto [d, w] : c.degrees) total += w;
  std::uint64_t r = rng.uniform_below(total);
  for (auto [d, w] : c.degrees) {
    if (r < w) return d;
    r -= w;
  }
  return c.degrees.back().first;
}

struct Lift {
  SchreierGraph graph;
  std::vector<FreeWord> transversal;  // u_k, k = 0..m-1
};

// Degree-m permutation lift of g; vertex (v, k) is v * m + k.
Lift random_lift(const SchreierGraph& g, unsigned m, bool coherent, Rng& rng, unsigned max_retries) {
  const std::size_t d = g.index();
  const std::size_t n = g.rank();
  const std::size_t total = d * m;
  for (unsigned attempt = 0; attempt <= max_retries; ++attempt) {
    std::vector<Permutation> succ(n, Permutation(total));
    std::vector<Vertex> shared;
    for (Vertex v = 0; v < d; ++v) {
      if (coherent) shared = rng.permutation(m);
      for (std::size_t x = 0; x < n; ++x) {
        const auto sigma = coherent ? shared : rng.permutation(m);
        const Vertex w = g.succ(x, v);
        for (unsigned k = 0; k < m; ++k) succ[x][v * m + k] = w * m + sigma[k];
      }
    }
    // Positive BFS from (base, 0); a finite permutation digraph is strongly
    // connected as soon as it is connected.
    std::vector<long> parent(total, -1);
    std::vector<int> via(total, 0);
    std::vector<Vertex> queue{0};
    parent[0] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (std::size_t x = 0; x < n; ++x) {
        const Vertex w = succ[x][u];
        if (parent[w] >= 0) continue;
        parent[w] = u;
        via[w] = static_cast<int>(x + 1);
        queue.push_back(w);
      }
    }
    if (queue.size() != total) continue;

    Lift lift{from_action(g.alphabet(), succ, 0), {}};
    for (unsigned k = 0; k < m; ++k) {
      std::vector<Letter> letters;
      for (Vertex at = k; at != 0; at = static_cast<Vertex>(parent[at])) letters.push_back(via[at]);
      std::reverse(letters.begin(), letters.end());
      lift.transversal.emplace_back(g.alphabet(), letters);
    }
    return lift;
  }
  throw Error(ErrorCode::RetriesExhausted,
              "no connected degree-" + std::to_string(m) + " lift after " +
                  std::to_string(max_retries + 1) + " attempts");
}

std::vector<CosetPart> generate_parts(const GenConfig& config, bool check_refinement) {
  validate(config);
  Rng rng(config.seed);
  const Alphabet alphabet = Alphabet::standard(config.rank);
  std::vector<Permutation> trivial(config.rank, Permutation{0});
  std::vector<CosetPart> parts;
  parts.push_back(make_part(from_action(alphabet, trivial, 0), FreeWord(alphabet)));

  for (unsigned step = 0; step < config.depth; ++step) {
    const std::size_t chosen = rng.uniform_below(parts.size());
    const unsigned m = pick_degree(rng, config);
    const CosetPart parent = parts[chosen];
    if (parent.index * m > config.guard) {
      throw Error(ErrorCode::GuardExceeded, "refining a part of index " + std::to_string(parent.index) +
                                                " by degree " + std::to_string(m) +
                                                " exceeds the guard " + std::to_string(config.guard));
    }
    const bool coherent = config.coherent_percent > 0 && rng.uniform_below(100) < config.coherent_percent;
    Lift lift = random_lift(parent.graph, m, coherent, rng, config.max_retries);
    std::vector<CosetPart> children;
    for (const auto& u : lift.transversal) children.push_back(make_part(lift.graph, u * parent.rep));
    if (check_refinement && !refines(parent, children, config.state_guard)) {
      throw std::logic_error("refinement of part " + std::to_string(chosen + 1) +
                             " is not a partition of it");
    }
    parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(chosen));
    parts.insert(parts.end(), children.begin(), children.end());
  }
  return parts;
}

CosetPartition finish(std::vector<CosetPart> parts, const GenConfig& config) {
  try {
    return verify_partition(std::move(parts), config.state_guard);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::StateSpaceTooLarge) throw;
    throw std::logic_error(std::string("generated family failed verification: ") + e.what());
  }
}

}  // namespace

CosetPartition generate(const GenConfig& config) { return finish(generate_parts(config, true), config); }

unsigned max_period(const CosetPartition& partition) {
  unsigned h = 1;
  for (const auto& p : partition.parts()) h = std::max(h, p.period);
  return h;
}

CosetPartition generate_with_period(const GenConfig& config, unsigned target_h, std::size_t budget) {
  if (target_h < 2) throw Error(ErrorCode::InvalidArgument, "target period must be >= 2");
  validate(config);
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    GenConfig c = config;
    c.seed = splitmix64(config.seed + attempt);
    std::vector<CosetPart> parts;
    try {
      // Cheap pass first; the accepted seed is replayed with every check.
      parts = generate_parts(c, false);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::GuardExceeded || e.code() == ErrorCode::RetriesExhausted) continue;
      throw;
    }
    unsigned h = 1;
    for (const auto& p : parts) h = std::max(h, p.period);
    if (h == target_h) return finish(generate_parts(c, true), c);
  }
  throw Error(ErrorCode::BudgetExhausted, "no partition with period " + std::to_string(target_h) +
                                              " in " + std::to_string(budget) + " attempts");
}

}  // namespace hsgon
