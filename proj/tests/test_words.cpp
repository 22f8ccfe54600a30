#include <gtest/gtest.h>

#include "hsgon/error.hpp"
#include "support.hpp"

using namespace hsgon;
using hsgon::test::ab;
using hsgon::test::w;

TEST(Words, ParseKeepsReducedText) {
  FreeWord x = w("abA");
  EXPECT_EQ(x.length(), 3u);
  EXPECT_EQ(x.str(), "abA");
  EXPECT_FALSE(x.is_positive());
}

TEST(Words, ParseCancels) {
  EXPECT_TRUE(w("aA").is_identity());
  EXPECT_TRUE(w("abBA").is_identity());
  EXPECT_EQ(w("abBb").str(), "ab");
}

TEST(Words, GeneratorOfN) {
  FreeWord x = w("abab");
  EXPECT_EQ(x.length(), 4u);
  EXPECT_TRUE(x.is_positive());
}

TEST(Words, UnknownLetter) {
  try {
    parse_word("abc", ab());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownLetter);
  }
  EXPECT_THROW(parse_word("a b", ab()), Error);
}

TEST(Words, Multiply) {
  EXPECT_EQ((w("ab") * w("Ba")).str(), "aa");
  EXPECT_EQ((w("a") * w("b")).str(), "ab");
  EXPECT_TRUE((w("abAB") * invert(w("abAB"))).is_identity());
}

TEST(Words, MultiplyAlphabetMismatch) {
  FreeWord x = parse_word("a", Alphabet({'a', 'b', 'c'}));
  try {
    multiply(x, w("a"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AlphabetMismatch);
  }
}

TEST(Words, Invert) {
  EXPECT_EQ(invert(w("ab")).str(), "BA");
  EXPECT_TRUE(invert(w("")).is_identity());
  EXPECT_EQ(invert(w("aa")).str(), "AA");
}

TEST(Words, AlphabetValidation) {
  EXPECT_THROW(Alphabet({'a', 'a'}), Error);
  EXPECT_THROW(Alphabet({'A'}), Error);
  EXPECT_EQ(Alphabet::standard(3).names(), (std::vector<char>{'a', 'b', 'c'}));
}

TEST(Words, RandomGroupLaws) {
  Rng rng(11);
  const std::string letters = "abAB";
  auto random_word = [&] {
    std::string s;
    const auto len = rng.uniform_below(12);
    for (std::uint64_t i = 0; i < len; ++i) s += letters[rng.uniform_below(4)];
    return s;
  };
  for (int trial = 0; trial < 500; ++trial) {
    const std::string su = random_word();
    FreeWord u = w(su), v = w(random_word()), x = w(random_word());
    EXPECT_EQ((u * v) * x, u * (v * x));
    EXPECT_TRUE((u * invert(u)).is_identity());
    EXPECT_TRUE((invert(u) * u).is_identity());
    EXPECT_EQ(w(u.str()), u);  // reduction is idempotent
    // No adjacent cancelling pair survives.
    auto ls = u.letters();
    for (std::size_t i = 1; i < ls.size(); ++i) EXPECT_NE(ls[i], -ls[i - 1]);
    // Reduced length never exceeds the literal length, with matching parity.
    EXPECT_LE(u.length(), su.size());
    EXPECT_EQ(u.length() % 2, su.size() % 2);
  }
}
