#include "hsgon/words.hpp"

#include <algorithm>
#include <cctype>

#include "hsgon/error.hpp"

namespace hsgon {

namespace {

void push_reduced(std::vector<Letter>& out, Letter x) {
  if (!out.empty() && out.back() == -x) {
    out.pop_back();
  } else {
    out.push_back(x);
  }
}

}  // namespace

Alphabet::Alphabet(std::vector<char> names) : names_(std::move(names)) {
  if (names_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "alphabet must have rank >= 1");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    char c = names_[i];
    if (c < 'a' || c > 'z') {
      throw Error(ErrorCode::InvalidArgument,
                  std::string("letter names must be lowercase ascii, got '") + c + "'");
    }
    if (std::find(names_.begin(), names_.begin() + static_cast<std::ptrdiff_t>(i), c) !=
        names_.begin() + static_cast<std::ptrdiff_t>(i)) {
      throw Error(ErrorCode::InvalidArgument, std::string("duplicate letter '") + c + "'");
    }
  }
}

Alphabet Alphabet::standard(std::size_t rank) {
  if (rank == 0 || rank > 26) {
    throw Error(ErrorCode::InvalidArgument, "rank must be in [1, 26]");
  }
  std::vector<char> names(rank);
  for (std::size_t i = 0; i < rank; ++i) names[i] = static_cast<char>('a' + i);
  return Alphabet(std::move(names));
}

Letter Alphabet::letter_of(char c) const noexcept {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == c) return static_cast<Letter>(i + 1);
    if (std::toupper(static_cast<unsigned char>(names_[i])) == static_cast<unsigned char>(c)) {
      return -static_cast<Letter>(i + 1);
    }
  }
  return 0;
}

char Alphabet::symbol(Letter letter) const {
  std::size_t g = static_cast<std::size_t>(letter > 0 ? letter : -letter) - 1;
  char c = names_.at(g);
  return letter > 0 ? c : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
}

FreeWord::FreeWord(Alphabet alphabet, std::span<const Letter> letters)
    : alphabet_(std::move(alphabet)) {
  const auto rank = static_cast<Letter>(alphabet_.rank());
  letters_.reserve(letters.size());
  for (Letter x : letters) {
    if (x == 0 || x > rank || x < -rank) {
      throw Error(ErrorCode::InvalidArgument, "letter out of range: " + std::to_string(x));
    }
    push_reduced(letters_, x);
  }
}

bool FreeWord::is_positive() const noexcept {
  return std::all_of(letters_.begin(), letters_.end(), [](Letter x) { return x > 0; });
}

std::string FreeWord::str() const {
  std::string out;
  out.reserve(letters_.size());
  for (Letter x : letters_) out.push_back(alphabet_.symbol(x));
  return out;
}

FreeWord parse_word(std::string_view text, const Alphabet& alphabet) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) {
    Letter x = alphabet.letter_of(c);
    if (x == 0) {
      throw Error(ErrorCode::UnknownLetter, std::string("'") + c + "' in \"" + std::string(text) + "\"");
    }
    letters.push_back(x);
  }
  return FreeWord(alphabet, letters);
}

FreeWord multiply(const FreeWord& u, const FreeWord& v) {
  if (!(u.alphabet() == v.alphabet())) {
    throw Error(ErrorCode::AlphabetMismatch, "cannot multiply words over different alphabets");
  }
  std::vector<Letter> letters(u.letters().begin(), u.letters().end());
  for (Letter x : v.letters()) push_reduced(letters, x);
  return FreeWord(u.alphabet(), letters);
}

FreeWord invert(const FreeWord& u) {
  std::vector<Letter> letters(u.letters().rbegin(), u.letters().rend());
  for (Letter& x : letters) x = -x;
  return FreeWord(u.alphabet(), letters);
}

}  // namespace hsgon
