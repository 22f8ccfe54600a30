#include <gtest/gtest.h>

#include <functional>

#include "hsgon/error.hpp"
#include "support.hpp"

using namespace hsgon;
using namespace hsgon::test;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Partition, Disjointness) {
  EXPECT_TRUE(disjoint(part(graph_N(), "a"), part(graph_N(), "ab")));
  EXPECT_FALSE(disjoint(part(graph_H(), ""), part(graph_H(), "")));
  EXPECT_TRUE(disjoint(part(graph_L(), ""), part(graph_N(), "a")));
  EXPECT_FALSE(disjoint(part(graph_L(), ""), part(graph_N(), "")));
}

TEST(Partition, Coverage) {
  std::vector<CosetPart> three{part(graph_L(), ""), part(graph_N(), "a"), part(graph_N(), "ab")};
  EXPECT_TRUE(covers(three));
  std::vector<CosetPart> only_l{part(graph_L(), "")};
  auto hole = find_uncovered(only_l);
  ASSERT_TRUE(hole.has_value());
  EXPECT_FALSE(only_l[0].contains(hole->word));
  std::vector<CosetPart> four{part(graph_N(), "a"), part(graph_N(), "ab"), part(graph_N(), "b"), part(graph_N(), "")};
  EXPECT_TRUE(covers(four));
}

TEST(Partition, VerifySortsByIndex) {
  CosetPartition p = verify_partition({part(graph_N(), "a"), part(graph_L(), ""), part(graph_N(), "ab")});
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p.parts()[0].index, 2u);
  EXPECT_EQ(p.parts()[1].index, 4u);
  EXPECT_EQ(p.parts()[2].index, 4u);
  EXPECT_EQ(p.parts()[1].rep.str(), "a");
  EXPECT_EQ(p.parts()[2].rep.str(), "ab");
}

TEST(Partition, PartData) {
  CosetPartition p = partition_L_Na_Nab();
  EXPECT_EQ(p.parts()[0].period, 1u);
  EXPECT_EQ(p.parts()[1].period, 2u);
  EXPECT_EQ(p.parts()[2].period, 2u);
  EXPECT_EQ(p.parts()[1].offset, 1u);
  EXPECT_EQ(p.parts()[2].offset, 2u);
}

TEST(Partition, VerifyErrors) {
  EXPECT_EQ(code_of([] { verify_partition({part(graph_L(), ""), part(graph_N(), "a")}); }),
            ErrorCode::DensityMismatch);
  EXPECT_EQ(code_of([] { verify_partition({part(graph_L(), ""), part(graph_L(), "")}); }), ErrorCode::NotCovering);
  EXPECT_EQ(code_of([] { verify_partition({part(folded({"a", "b"}), "")}); }), ErrorCode::IndexOne);
  // Density 1 with a repeated coset: the missing coset Nb is the witness.
  try {
    verify_partition({part(graph_N(), ""), part(graph_N(), "a"), part(graph_N(), "ab"), part(graph_N(), "a")});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCovering);
    ASSERT_EQ(e.info().size(), 4u);
    EXPECT_EQ(e.info()[0], walk(graph_N(), 0, w("b")));
  }
}

TEST(Partition, StateGuard) {
  std::vector<CosetPart> three{part(graph_L(), ""), part(graph_N(), "a"), part(graph_N(), "ab")};
  EXPECT_EQ(code_of([&] { find_uncovered(three, 2); }), ErrorCode::StateSpaceTooLarge);
  EXPECT_FALSE(find_uncovered(three, 8).has_value());
}

TEST(Partition, CensusSmall) {
  CosetPartition p = partition_L_Na_Nab();
  WordCensus c = word_census(p, 1);
  EXPECT_EQ(c.counts[0][0], 1u);
  EXPECT_EQ(c.counts[1][0], 0u);
  EXPECT_EQ(c.counts[2][0], 0u);
  EXPECT_EQ(c.counts[0][1], 1u);  // b
  EXPECT_EQ(c.counts[1][1], 1u);  // a
  EXPECT_EQ(c.counts[2][1], 0u);
}

TEST(Partition, CensusMatchesMatrixPowers) {
  CosetPartition p = verify_partition(
      {part(graph_N(), ""), part(graph_N(), "a"), part(graph_N(), "ab"), part(graph_N(), "b")});
  const unsigned k_max = 10;
  WordCensus c = word_census(p, k_max);
  const auto pw = powers(transition_matrix(graph_N()), k_max);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (unsigned k = 0; k <= k_max; ++k) EXPECT_EQ(Integer(static_cast<unsigned long>(c.counts[i][k])), pw[k](0, p.parts()[i].accept));
  for (unsigned k = 0; k <= k_max; ++k) {
    std::uint64_t total = 0;
    for (const auto& row : c.counts) total += row[k];
    EXPECT_EQ(total, std::uint64_t{1} << k);
  }
}

TEST(Partition, CensusGuard) {
  EXPECT_EQ(code_of([] { word_census(partition_L_Na_Nab(), 30, 1000); }), ErrorCode::StateSpaceTooLarge);
}

TEST(Partition, RandomFamiliesAgreeWithBruteForce) {
  // Brute force: every word of length <= 6 (positive or not) must lie in
  // exactly one part of a verified partition.
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    GenConfig c;
    c.seed = seed;
    c.depth = 3;
    CosetPartition p = generate(c);
    std::vector<std::vector<Letter>> frontier{{}};
    for (int len = 0; len <= 6; ++len) {
      std::vector<std::vector<Letter>> next;
      for (const auto& letters : frontier) {
        FreeWord x(p.alphabet(), letters);
        int hits = 0;
        for (const auto& q : p.parts()) hits += q.contains(x) ? 1 : 0;
        ASSERT_EQ(hits, 1) << x.str();
        for (Letter l : {1, 2, -1, -2}) {
          if (!letters.empty() && letters.back() == -l) continue;
          auto more = letters;
          more.push_back(l);
          next.push_back(std::move(more));
        }
      }
      frontier = std::move(next);
    }
  }
}
