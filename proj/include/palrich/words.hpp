#pragma once

// Words over small indexed alphabets and the generators for every word
// family the library analyzes.
//
// Letters are dense indices 0..k-1 stored one per byte in a std::string;
// printable symbols only appear at the parse/print boundary.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace palrich {

using Letter = std::uint8_t;

inline constexpr std::size_t kMaxAlphabet = 26;

class Alphabet {
 public:
  Alphabet() = default;
  // Symbols must be distinct; their order defines the letter indices.
  explicit Alphabet(std::string_view symbols);

  // Sorted distinct letters of `text`.
  static Alphabet infer(std::string_view text);

  std::size_t size() const noexcept { return symbols_.size(); }
  std::string_view symbols() const noexcept { return symbols_; }
  char symbol(Letter letter) const;
  std::optional<Letter> index(char symbol) const noexcept;

  // Union of two alphabets, sorted.
  Alphabet merged(const Alphabet& other) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::string symbols_;
};

class Word {
 public:
  Word() = default;
  // `letters` holds raw indices; each must be < alphabet.size().
  Word(Alphabet alphabet, std::string letters);

  static Word parse(std::string_view text);
  static Word parse(std::string_view text, const Alphabet& alphabet);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const noexcept { return static_cast<Letter>(letters_[i]); }

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::string_view letters() const noexcept { return letters_; }

  std::string str() const;
  Word substr(std::size_t pos, std::size_t len = std::string::npos) const;
  Word prefix(std::size_t len) const { return substr(0, len); }

  Word& operator+=(const Word& other);
  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

  bool operator==(const Word& other) const noexcept { return letters_ == other.letters_; }
  std::strong_ordering operator<=>(const Word& other) const noexcept {
    return letters_.compare(other.letters_) <=> 0;
  }

 private:
  Alphabet alphabet_;
  std::string letters_;
};

// Printable form of a raw index string.
std::string render(std::string_view letters, const Alphabet& alphabet);

std::string reversed(std::string_view letters);
bool is_palindrome(std::string_view letters) noexcept;

Word reverse(const Word& w);
bool is_palindrome(const Word& w) noexcept;

class Morphism {
 public:
  // One non-empty image per alphabet letter.
  Morphism(Alphabet alphabet, std::vector<std::string> images);

  // Textual form "a->ab,b->a". The alphabet is the sorted set of all
  // letters mentioned; every such letter needs a rule.
  static Morphism parse(std::string_view spec);
  static Morphism identity(const Alphabet& alphabet);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::string_view image(Letter letter) const { return images_.at(letter); }

  std::string apply(std::string_view letters) const;
  Word apply(const Word& w) const;

  // True if m(seed) starts with seed and has length >= 2.
  bool prolongable(Letter seed) const;

  std::string str() const;

 private:
  Alphabet alphabet_;
  std::vector<std::string> images_;
};

Word morphic_image(const Morphism& m, const Word& w);

// Length-`len` prefix of the fixed point of `m` starting with `seed`.
Word fixed_point(const Morphism& m, Letter seed, std::size_t len);
Word fixed_point(const Morphism& m, char seed, std::size_t len);

Word periodic_word(const Word& block, std::size_t len);

// Prefix of s = bc a^2 bc a^3 bc a^2 bc a^4 ..., the limit of
// s_1 = bc, s_n = s_{n-1} a^n s_{n-1}. Alphabet {a, b, c}.
Word s_word(std::size_t len);

Word palindromic_closure(const Word& w);

class DirectiveSequence {
 public:
  DirectiveSequence(Alphabet alphabet, std::string letters);
  static DirectiveSequence parse(std::string_view text);
  // `pattern` repeated until it has `count` letters.
  static DirectiveSequence cyclic(std::string_view pattern, std::size_t count);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::string_view letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }

 private:
  Alphabet alphabet_;
  std::string letters_;
};

// Prefix of the iterated palindromic closure u_{k+1} = (u_k d_k)^(+).
Word episturmian_word(const DirectiveSequence& directive, std::size_t len);

}  // namespace palrich
