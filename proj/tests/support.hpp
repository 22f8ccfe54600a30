#pragma once

// Fixtures and brute-force oracles shared by the test suites. The oracles
// deliberately avoid the library's own algorithms: matrix powers instead of
// recurrences, Laplace expansion instead of elimination, complex floats
// instead of cyclotomic arithmetic.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "hsgon/gen.hpp"
#include "hsgon/matrix.hpp"
#include "hsgon/partition.hpp"
#include "hsgon/schreier.hpp"
#include "hsgon/words.hpp"

namespace hsgon::test {

inline Alphabet ab() { return Alphabet({'a', 'b'}); }

inline FreeWord w(const std::string& text) { return parse_word(text, ab()); }

inline SchreierGraph folded(const std::vector<std::string>& gens) {
  std::vector<FreeWord> words;
  for (const auto& g : gens) words.push_back(w(g));
  return fold(words, ab());
}

inline SchreierGraph graph_H() { return folded({"b", "aa", "abba", "abaaba", "abababa"}); }
inline SchreierGraph graph_N() { return folded({"aa", "bb", "abba", "abaaba", "abab"}); }
inline SchreierGraph graph_L() { return folded({"aa", "b", "aba"}); }

inline CosetPart part(const SchreierGraph& g, const std::string& rep) { return make_part(g, w(rep)); }

inline CosetPartition partition_L_Na_Nab() {
  return verify_partition({part(graph_L(), ""), part(graph_N(), "a"), part(graph_N(), "ab")});
}

// (A^k)_{ij} for k = 0..k_max by repeated multiplication.
inline std::vector<BigMatrix> powers(const IntMatrix& a, std::size_t k_max) {
  std::vector<BigMatrix> out{BigMatrix::identity(a.rows())};
  const BigMatrix big = to_big(a);
  for (std::size_t k = 1; k <= k_max; ++k) out.push_back(out.back() * big);
  return out;
}

// Integer polynomials, constant term first.
using ZPoly = std::vector<Integer>;

inline ZPoly zadd(const ZPoly& a, const ZPoly& b) {
  ZPoly c(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  return c;
}

inline ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

inline ZPoly ztrim(ZPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

// Laplace expansion along the first row. Exponential; small matrices only.
inline ZPoly laplace_det(const std::vector<std::vector<ZPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return {Integer(1)};
  ZPoly acc;
  for (std::size_t c = 0; c < n; ++c) {
    if (ztrim(m[0][c]).empty()) continue;
    std::vector<std::vector<ZPoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<ZPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    ZPoly term = zmul(m[0][c], laplace_det(minor));
    if (c % 2 == 1)
      for (auto& x : term) x = -x;
    acc = zadd(acc, term);
  }
  return ztrim(acc);
}

// I - zA with the given row and column deleted (or none when out of range).
inline std::vector<std::vector<ZPoly>> i_minus_za(const IntMatrix& a, std::size_t drop_row = SIZE_MAX,
                                                  std::size_t drop_col = SIZE_MAX) {
  std::vector<std::vector<ZPoly>> m;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i == drop_row) continue;
    std::vector<ZPoly> row;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j == drop_col) continue;
      row.push_back({Integer(i == j ? 1 : 0), Integer(-static_cast<long>(a(i, j)))});
    }
    m.push_back(row);
  }
  return m;
}

inline std::complex<double> root_of_unity(unsigned h, long k) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(h);
  return {std::cos(angle), std::sin(angle)};
}

// A transitive random action of the given degree, by rejection.
inline SchreierGraph random_graph(Rng& rng, std::size_t rank, std::size_t degree) {
  const Alphabet alphabet = Alphabet::standard(rank);
  for (;;) {
    std::vector<Permutation> perms;
    for (std::size_t x = 0; x < rank; ++x) perms.push_back(rng.permutation(degree));
    try {
      return from_action(alphabet, perms, 0);
    } catch (const std::exception&) {
    }
  }
}

}  // namespace hsgon::test
