#include "hsgon/partition.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <unordered_set>

#include "hsgon/error.hpp"
#include "hsgon/matrix.hpp"

namespace hsgon {

namespace {

void require_same_alphabet(std::span<const CosetPart> parts) {
  for (const auto& p : parts) {
    if (!(p.graph.alphabet() == parts.front().graph.alphabet())) {
      throw Error(ErrorCode::AlphabetMismatch, "parts use different alphabets");
    }
  }
}

// Breadth-first search of the orbit of the base tuple under the
// simultaneous action of all letters and their inverses. Stops at the first
// tuple rejected by `accept` and returns it with a word reaching it.
std::optional<OrbitWitness> explore(
    std::span<const CosetPart> parts, std::uint64_t guard,
    const std::function<bool(const std::vector<Vertex>&)>& accept) {
  require_same_alphabet(parts);
  std::vector<const SchreierGraph*> graphs;
  std::vector<std::size_t> coord(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    auto it = std::find_if(graphs.begin(), graphs.end(),
                           [&](const SchreierGraph* g) { return *g == parts[i].graph; });
    coord[i] = static_cast<std::size_t>(it - graphs.begin());
    if (it == graphs.end()) graphs.push_back(&parts[i].graph);
  }
  const std::size_t r = graphs.size();
  const std::size_t rank = parts.front().graph.rank();

  std::vector<Vertex> arena(r, 0);
  std::vector<std::size_t> parent{0};
  std::vector<Letter> via{0};
  auto slice_hash = [&](std::size_t k) {
    std::size_t h = 1469598103934665603ull;
    for (std::size_t c = 0; c < r; ++c) h = (h ^ arena[k * r + c]) * 1099511628211ull;
    return h;
  };
  auto slice_eq = [&](std::size_t a, std::size_t b) {
    return std::equal(arena.begin() + static_cast<std::ptrdiff_t>(a * r),
                      arena.begin() + static_cast<std::ptrdiff_t>(a * r + r),
                      arena.begin() + static_cast<std::ptrdiff_t>(b * r));
  };
  std::unordered_set<std::size_t, decltype(slice_hash), decltype(slice_eq)> seen(64, slice_hash,
                                                                                 slice_eq);
  seen.insert(0);

  std::vector<Vertex> per_part(parts.size());
  for (std::size_t head = 0; head < parent.size(); ++head) {
    for (std::size_t i = 0; i < parts.size(); ++i) per_part[i] = arena[head * r + coord[i]];
    if (!accept(per_part)) {
      std::vector<Letter> letters;
      for (std::size_t k = head; k != 0; k = parent[k]) letters.push_back(via[k]);
      std::reverse(letters.begin(), letters.end());
      return OrbitWitness{per_part, FreeWord(parts.front().graph.alphabet(), letters)};
    }
    for (std::size_t x = 0; x < rank; ++x) {
      for (Letter letter : {static_cast<Letter>(x + 1), -static_cast<Letter>(x + 1)}) {
        const std::size_t k = parent.size();
        for (std::size_t c = 0; c < r; ++c) arena.push_back(graphs[c]->step(arena[head * r + c], letter));
        if (seen.insert(k).second) {
          parent.push_back(head);
          via.push_back(letter);
          if (parent.size() > guard) {
            throw Error(ErrorCode::StateSpaceTooLarge,
                        "orbit exceeds " + std::to_string(guard) + " states");
          }
        } else {
          arena.resize(arena.size() - r);
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

CosetPart make_part(SchreierGraph graph, FreeWord rep) {
  if (!(rep.alphabet() == graph.alphabet())) {
    throw Error(ErrorCode::AlphabetMismatch, "representative \"" + rep.str() + "\" uses another alphabet");
  }
  CosetPart part{std::move(graph), std::move(rep)};
  part.accept = walk(part.graph, part.graph.base(), part.rep);
  part.index = part.graph.index();
  part.period = period(part.graph);
  part.offset = min_positive_distance(part.graph, part.graph.base(), part.accept);
  return part;
}

bool disjoint(const CosetPart& p, const CosetPart& q) {
  std::vector<CosetPart> pair{p, q};
  auto meet = explore(pair, kDefaultStateGuard, [&](const std::vector<Vertex>& s) {
    return !(s[0] == p.accept && s[1] == q.accept);
  });
  return !meet.has_value();
}

std::optional<OrbitWitness> find_uncovered(std::span<const CosetPart> parts, std::uint64_t guard) {
  if (parts.empty()) throw Error(ErrorCode::InvalidArgument, "empty family of cosets");
  return explore(parts, guard, [&](const std::vector<Vertex>& s) {
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (s[i] == parts[i].accept) return true;
    return false;
  });
}

bool covers(std::span<const CosetPart> parts, std::uint64_t guard) {
  return !find_uncovered(parts, guard).has_value();
}

bool refines(const CosetPart& parent, std::span<const CosetPart> children, std::uint64_t guard) {
  if (children.empty()) return false;
  std::vector<CosetPart> all{parent};
  all.insert(all.end(), children.begin(), children.end());
  auto bad = explore(all, guard, [&](const std::vector<Vertex>& s) {
    std::size_t hits = 0;
    for (std::size_t i = 1; i < all.size(); ++i) hits += s[i] == all[i].accept;
    return hits == (s[0] == parent.accept ? 1u : 0u);
  });
  return !bad.has_value();
}

CosetPartition verify_partition(std::vector<CosetPart> parts, std::uint64_t guard) {
  if (parts.empty()) throw Error(ErrorCode::InvalidArgument, "a partition needs at least one part");
  require_same_alphabet(parts);
  Rational density = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].index == 1) {
      throw Error(ErrorCode::IndexOne, "part " + std::to_string(i + 1) + " is the whole group", {i});
    }
    density += Rational(1, static_cast<unsigned long>(parts[i].index));
  }
  if (density != 1) {
    throw Error(ErrorCode::DensityMismatch, "sum of 1/d_i is " + density.get_str());
  }
  // Once the densities sum to 1, overlaps and holes come together; the
  // coverage check runs first so the error carries a witness word.
  if (auto hole = find_uncovered(parts, guard)) {
    std::vector<std::size_t> info(hole->states.begin(), hole->states.end());
    throw Error(ErrorCode::NotCovering, "no part contains \"" + hole->word.str() + "\"", std::move(info));
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      if (!disjoint(parts[i], parts[j])) {
        throw Error(ErrorCode::NotDisjoint,
                    "parts " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " intersect",
                    {i, j});
      }
    }
  }
  std::stable_sort(parts.begin(), parts.end(),
                   [](const CosetPart& a, const CosetPart& b) { return a.index < b.index; });
  return CosetPartition(std::move(parts));
}

WordCensus word_census(const CosetPartition& partition, unsigned k_max, std::uint64_t guard) {
  const std::size_t n = partition.rank();
  Integer total = 1;
  for (unsigned k = 0; k < k_max; ++k) total *= static_cast<unsigned long>(n);
  if (total > Integer(std::to_string(guard))) {
    throw Error(ErrorCode::StateSpaceTooLarge, "n^k_max exceeds the census guard");
  }
  const auto& parts = partition.parts();
  const std::size_t s = parts.size();
  WordCensus census;
  census.counts.assign(s, std::vector<std::uint64_t>(k_max + 1, 0));

  // Depth-first over positive words; states[k] holds every part's vertex
  // after the first k letters.
  std::vector<std::vector<Vertex>> states(k_max + 1, std::vector<Vertex>(s, 0));
  std::vector<std::size_t> letters;
  auto tally = [&](unsigned depth) {
    std::size_t owner = s;
    std::size_t hits = 0;
    for (std::size_t i = 0; i < s; ++i) {
      if (states[depth][i] == parts[i].accept) {
        owner = i;
        ++hits;
      }
    }
    if (hits != 1) {
      std::string word;
      for (auto x : letters) word.push_back(partition.alphabet().name(x));
      throw Error(hits == 0 ? ErrorCode::NotCovering : ErrorCode::NotDisjoint,
                  "word \"" + word + "\" lies in " + std::to_string(hits) + " parts");
    }
    ++census.counts[owner][depth];
  };
  std::function<void(unsigned)> descend = [&](unsigned depth) {
    tally(depth);
    if (depth == k_max) return;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t i = 0; i < s; ++i) states[depth + 1][i] = parts[i].graph.succ(x, states[depth][i]);
      letters.push_back(x);
      descend(depth + 1);
      letters.pop_back();
    }
  };
  descend(0);
  return census;
}

}  // namespace hsgon
