#include "hsgon/schreier.hpp"

#include <cassert>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <utility>

#include "hsgon/error.hpp"

namespace hsgon {

namespace {

constexpr std::int64_t kNone = -1;

// Union-find over wedge vertices; every edge is recorded at both ends so a
// merge can detect the follow-up folds it causes.
class Folder {
 public:
  explicit Folder(std::size_t rank) : rank_(rank) { add_vertex(); }

  Vertex add_vertex() {
    auto v = static_cast<Vertex>(parent_.size());
    parent_.push_back(v);
    out_.resize(out_.size() + rank_, kNone);
    in_.resize(in_.size() + rank_, kNone);
    return v;
  }

  Vertex find(Vertex v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  void add_edge(Vertex u, std::size_t x, Vertex v) {
    u = find(u);
    v = find(v);
    link(out_[u * rank_ + x], v);
    link(in_[v * rank_ + x], u);
    settle();
  }

  // Successor table on the folded graph, indexed by root; kNone where the
  // edge is missing.
  std::vector<Vertex> roots() {
    std::vector<Vertex> r;
    for (Vertex v = 0; v < parent_.size(); ++v)
      if (find(v) == v) r.push_back(v);
    return r;
  }

  std::int64_t out(Vertex root, std::size_t x) {
    auto t = out_[root * rank_ + x];
    return t == kNone ? kNone : static_cast<std::int64_t>(find(static_cast<Vertex>(t)));
  }

 private:
  void link(std::int64_t& slot, Vertex target) {
    if (slot == kNone) {
      slot = target;
    } else {
      pending_.emplace_back(static_cast<Vertex>(slot), target);
    }
  }

  void merge(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    parent_[b] = a;
    for (std::size_t x = 0; x < rank_; ++x) {
      if (out_[b * rank_ + x] != kNone) link(out_[a * rank_ + x], static_cast<Vertex>(out_[b * rank_ + x]));
      if (in_[b * rank_ + x] != kNone) link(in_[a * rank_ + x], static_cast<Vertex>(in_[b * rank_ + x]));
    }
  }

  void settle() {
    while (!pending_.empty()) {
      auto [a, b] = pending_.back();
      pending_.pop_back();
      merge(a, b);
    }
  }

  std::size_t rank_;
  std::vector<Vertex> parent_;
  std::vector<std::int64_t> out_;
  std::vector<std::int64_t> in_;
  std::vector<std::pair<Vertex, Vertex>> pending_;
};

std::vector<Permutation> inverse_action(const std::vector<Permutation>& succ) {
  std::vector<Permutation> pred(succ.size(), Permutation(succ.front().size()));
  for (std::size_t x = 0; x < succ.size(); ++x)
    for (Vertex v = 0; v < succ[x].size(); ++v) pred[x][succ[x][v]] = v;
  return pred;
}

}  // namespace

SchreierGraph::SchreierGraph(Alphabet alphabet, std::vector<Permutation> succ)
    : alphabet_(std::move(alphabet)), succ_(std::move(succ)), pred_(inverse_action(succ_)) {}

SchreierGraph from_action(const Alphabet& alphabet, std::vector<Permutation> permutations,
                          Vertex base) {
  if (permutations.size() != alphabet.rank()) {
    throw Error(ErrorCode::AlphabetMismatch, "need one permutation per generator");
  }
  const std::size_t d = permutations.front().size();
  if (d == 0) throw Error(ErrorCode::NotPermutation, "degree must be positive");
  for (const auto& p : permutations) {
    if (p.size() != d) throw Error(ErrorCode::NotPermutation, "permutations differ in degree");
    std::vector<bool> hit(d, false);
    for (Vertex v : p) {
      if (v >= d || hit[v]) throw Error(ErrorCode::NotPermutation, "image list is not a bijection");
      hit[v] = true;
    }
  }
  if (base >= d) throw Error(ErrorCode::InvalidArgument, "base vertex out of range");

  // Canonical relabelling: BFS from base, generators in alphabet order.
  constexpr Vertex kUnseen = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> label(d, kUnseen);
  std::vector<Vertex> order;
  order.reserve(d);
  label[base] = 0;
  order.push_back(base);
  for (std::size_t head = 0; head < order.size(); ++head) {
    Vertex v = order[head];
    for (const auto& p : permutations) {
      Vertex w = p[v];
      if (label[w] == kUnseen) {
        label[w] = static_cast<Vertex>(order.size());
        order.push_back(w);
      }
    }
  }
  if (order.size() != d) {
    throw Error(ErrorCode::NotTransitive,
                "only " + std::to_string(order.size()) + " of " + std::to_string(d) +
                    " points reachable from the base");
  }
  std::vector<Permutation> succ(permutations.size(), Permutation(d));
  for (std::size_t x = 0; x < permutations.size(); ++x)
    for (Vertex v = 0; v < d; ++v) succ[x][label[v]] = label[permutations[x][v]];
  return SchreierGraph(alphabet, std::move(succ));
}

SchreierGraph fold(std::span<const FreeWord> generators, const Alphabet& alphabet) {
  Folder folder(alphabet.rank());
  const Vertex base = 0;
  for (const FreeWord& w : generators) {
    if (!(w.alphabet() == alphabet)) {
      throw Error(ErrorCode::AlphabetMismatch, "generator \"" + w.str() + "\" uses another alphabet");
    }
    auto letters = w.letters();
    Vertex cur = base;
    for (std::size_t t = 0; t < letters.size(); ++t) {
      Vertex next = t + 1 == letters.size() ? base : folder.add_vertex();
      Letter x = letters[t];
      if (x > 0) {
        folder.add_edge(cur, static_cast<std::size_t>(x - 1), next);
      } else {
        folder.add_edge(next, static_cast<std::size_t>(-x - 1), cur);
      }
      cur = next;
    }
  }

  auto roots = folder.roots();
  std::vector<std::int64_t> dense(roots.back() + 1, kNone);
  for (std::size_t k = 0; k < roots.size(); ++k) dense[roots[k]] = static_cast<std::int64_t>(k);

  const std::size_t d = roots.size();
  std::vector<Permutation> succ(alphabet.rank(), Permutation(d));
  for (std::size_t x = 0; x < alphabet.rank(); ++x) {
    for (std::size_t k = 0; k < d; ++k) {
      auto t = folder.out(roots[k], x);
      if (t == kNone) {
        throw Error(ErrorCode::InfiniteIndex,
                    "folded graph has no '" + std::string(1, alphabet.name(x)) +
                        "' edge at some vertex; the subgroup has infinite index");
      }
      succ[x][k] = static_cast<Vertex>(dense[static_cast<std::size_t>(t)]);
    }
  }
  return from_action(alphabet, std::move(succ), static_cast<Vertex>(dense[folder.find(base)]));
}

Vertex walk(const SchreierGraph& g, Vertex start, const FreeWord& w) {
  Vertex v = start;
  for (Letter x : w.letters()) v = g.step(v, x);
  return v;
}

IntMatrix transition_matrix(const SchreierGraph& g) {
  const std::size_t d = g.index();
  IntMatrix a(d, d);
  for (const auto& p : g.action())
    for (Vertex v = 0; v < d; ++v) a(v, p[v]) += 1;
  return a;
}

std::vector<unsigned> positive_distances(const SchreierGraph& g, Vertex from) {
  constexpr unsigned kUnseen = std::numeric_limits<unsigned>::max();
  std::vector<unsigned> dist(g.index(), kUnseen);
  std::deque<Vertex> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (const auto& p : g.action()) {
      Vertex w = p[v];
      if (dist[w] == kUnseen) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

unsigned min_positive_distance(const SchreierGraph& g, Vertex i, Vertex j) {
  return positive_distances(g, i).at(j);
}

std::vector<FreeWord> positive_paths(const SchreierGraph& g, Vertex from) {
  const std::size_t d = g.index();
  std::vector<std::int64_t> parent(d, kNone);
  std::vector<Letter> via(d, 0);
  std::vector<Vertex> order{from};
  parent[from] = from;
  for (std::size_t head = 0; head < order.size(); ++head) {
    Vertex v = order[head];
    for (std::size_t x = 0; x < g.rank(); ++x) {
      Vertex w = g.succ(x, v);
      if (parent[w] == kNone) {
        parent[w] = v;
        via[w] = static_cast<Letter>(x + 1);
        order.push_back(w);
      }
    }
  }
  std::vector<FreeWord> words;
  words.reserve(d);
  for (Vertex target = 0; target < d; ++target) {
    std::vector<Letter> letters;
    for (Vertex v = target; v != from; v = static_cast<Vertex>(parent[v])) letters.push_back(via[v]);
    std::vector<Letter> forward(letters.rbegin(), letters.rend());
    words.emplace_back(g.alphabet(), forward);
  }
  return words;
}

unsigned period(const SchreierGraph& g) {
  auto level = positive_distances(g, g.base());
  unsigned h = 0;
  for (const auto& p : g.action()) {
    for (Vertex u = 0; u < g.index(); ++u) {
      long diff = static_cast<long>(level[u]) + 1 - static_cast<long>(level[p[u]]);
      h = std::gcd(h, static_cast<unsigned>(diff < 0 ? -diff : diff));
    }
  }
  assert(h > 0);
  return h;
}

SpectralSummary spectral_summary(const SchreierGraph& g) {
  const std::size_t d = g.index();
  const auto n = static_cast<std::int64_t>(g.rank());
  IntMatrix a = transition_matrix(g);
  for (std::size_t i = 0; i < d; ++i) {
    std::int64_t row = 0;
    std::int64_t col = 0;
    for (std::size_t j = 0; j < d; ++j) {
      row += a(i, j);
      col += a(j, i);
    }
    // A v_R = n v_R and v_L A = n v_L hold iff every row and column sums to n.
    assert(row == n && col == n);
    (void)row;
    (void)col;
  }
  SpectralSummary s;
  s.lambda_pf = n;
  s.period = period(g);
  s.right_eigenvector.assign(d, Rational(1));
  s.left_eigenvector.assign(d, Rational(1, static_cast<unsigned long>(d)));
  s.limit = Matrix<Rational>(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) s.limit(i, j) = s.right_eigenvector[i] * s.left_eigenvector[j];
  return s;
}

bool cesaro_check(const SchreierGraph& g, unsigned k_max, double tol, CesaroMode mode) {
  if (k_max < 1 || !(tol > 0)) throw Error(ErrorCode::InvalidArgument, "need k_max >= 1 and tol > 0");
  const std::size_t d = g.index();
  const double inv_n = 1.0 / static_cast<double>(g.rank());
  std::vector<double> power(d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i) power[i * d + i] = 1.0;
  std::vector<double> sum = power;
  std::vector<double> next(d * d);
  for (unsigned m = 1; m <= k_max; ++m) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t i = 0; i < d; ++i)
      for (const auto& p : g.action())
        for (Vertex j = 0; j < d; ++j) next[i * d + p[j]] += power[i * d + j] * inv_n;
    power.swap(next);
    for (std::size_t k = 0; k < d * d; ++k) sum[k] += power[k];
  }
  const double target = 1.0 / static_cast<double>(d);
  for (std::size_t k = 0; k < d * d; ++k) {
    double value = mode == CesaroMode::Average ? sum[k] / (k_max + 1.0) : power[k];
    if (std::fabs(value - target) > tol) return false;
  }
  return true;
}

}  // namespace hsgon
