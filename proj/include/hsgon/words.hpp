#pragma once

// Words in a free group F_n. A letter is a signed generator index:
// +(g+1) is generator g, -(g+1) is its inverse. In text, generator g is
// the lowercase name and its inverse the uppercase one ("A" = a^-1).

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hsgon {

using Letter = int;

class Alphabet {
 public:
  // Names must be distinct lowercase ASCII letters.
  explicit Alphabet(std::vector<char> names);

  // The first `rank` letters of a, b, c, ...
  static Alphabet standard(std::size_t rank);

  std::size_t rank() const noexcept { return names_.size(); }
  const std::vector<char>& names() const noexcept { return names_; }
  char name(std::size_t generator) const { return names_.at(generator); }

  // Signed letter for a character, 0 if the character is not in the alphabet.
  Letter letter_of(char c) const noexcept;
  char symbol(Letter letter) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<char> names_;
};

// A freely reduced word; the empty word is the identity.
class FreeWord {
 public:
  explicit FreeWord(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  // Freely reduces the given letters.
  FreeWord(Alphabet alphabet, std::span<const Letter> letters);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool is_identity() const noexcept { return letters_.empty(); }

  // True if every letter is a generator (no inverses).
  bool is_positive() const noexcept;

  std::string str() const;

  bool operator==(const FreeWord&) const = default;

 private:
  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

FreeWord parse_word(std::string_view text, const Alphabet& alphabet);
FreeWord multiply(const FreeWord& u, const FreeWord& v);
FreeWord invert(const FreeWord& u);

inline FreeWord operator*(const FreeWord& u, const FreeWord& v) { return multiply(u, v); }

}  // namespace hsgon
