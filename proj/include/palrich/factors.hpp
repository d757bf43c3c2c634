#pragma once

// Exact factor bookkeeping: distinct factors per length with occurrence
// lists and extension letter sets, special factors, complete returns, and
// reversal-closure / recurrence probes.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "palrich/words.hpp"

namespace palrich {

// Bit i set <=> letter i is an extension.
using LetterSet = std::uint32_t;

inline std::size_t letter_count(LetterSet s) noexcept { return static_cast<std::size_t>(__builtin_popcount(s)); }

class FactorIndex {
 public:
  // Window sweep over `w`, lengths 0..n_max+1. Requires n_max + 1 <= |w|.
  static FactorIndex build(const Word& w, std::size_t n_max);

  // Index over an exact factor language given per length 0..n_max+1 (no
  // occurrence data). Each level must be factorial w.r.t. the next: every
  // factor of length n+1 has its length-n prefix and suffix in level n.
  static FactorIndex from_language(Alphabet alphabet, std::vector<std::vector<std::string>> levels);

  std::size_t n_max() const noexcept { return levels_.size() - 2; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }

  bool has_occurrences() const noexcept { return source_.has_value(); }
  // Only for window-built indices.
  const Word& source() const;

  // Sorted (lexicographic by letter index) factors of length n, n <= n_max+1.
  std::span<const std::string> factors(std::size_t n) const;
  std::optional<std::size_t> find(std::string_view factor) const;
  bool contains(std::string_view factor) const { return find(factor).has_value(); }

  // Sorted 0-based start positions.
  std::span<const std::uint32_t> occurrences(std::size_t n, std::size_t id) const;

  // Extension sets, n <= n_max. Only occurrences with a neighbour letter
  // inside the source count.
  LetterSet right_extensions(std::size_t n, std::size_t id) const;
  LetterSet left_extensions(std::size_t n, std::size_t id) const;
  std::size_t out_degree(std::size_t n, std::size_t id) const { return letter_count(right_extensions(n, id)); }
  std::size_t in_degree(std::size_t n, std::size_t id) const { return letter_count(left_extensions(n, id)); }

 private:
  struct Level {
    std::vector<std::string> factors;
    std::vector<LetterSet> right;
    std::vector<LetterSet> left;
    std::vector<std::uint32_t> occ_offsets;  // CSR, size = factors + 1
    std::vector<std::uint32_t> occ;
  };

  void compute_extensions();
  const Level& level(std::size_t n) const;

  Alphabet alphabet_;
  std::optional<Word> source_;
  std::vector<Level> levels_;
};

// Distinct-factor counts C(0..n_max+1) of `w` without building occurrence
// lists.
std::vector<std::size_t> factor_counts(const Word& w, std::size_t n_max);

std::size_t factor_complexity(const FactorIndex& idx, std::size_t n);

struct SpecialFactorReport {
  std::size_t n = 0;
  std::vector<std::string> right_special;
  std::vector<std::string> left_special;
  std::vector<std::string> bispecial;
  std::size_t special_count = 0;        // |right ∪ left|
  std::size_t special_palindromes = 0;  // p
};

SpecialFactorReport special_factors(const FactorIndex& idx, std::size_t n);

// (C(n+1) - C(n), Σ_{v special} (deg⁺(v) - 1)).
std::pair<long long, long long> complexity_difference_identity(const FactorIndex& idx, std::size_t n);

struct CompleteReturns {
  std::vector<Word> in_order;  // one per consecutive occurrence pair
  std::vector<Word> distinct;  // sorted, deduplicated
};

CompleteReturns complete_returns(const FactorIndex& idx, const Word& u);

struct ClosureCheck {
  bool closed = true;
  std::optional<Word> witness;  // least factor whose reversal is missing
};

ClosureCheck is_closed_under_reversal(const FactorIndex& idx, std::size_t n);

// Necessary-condition probe: every factor of length <= n occurs at least
// `min_occurrences` times in the source.
bool recurrence_probe(const FactorIndex& idx, std::size_t n, std::size_t min_occurrences);

using PrefixGenerator = std::function<Word(std::size_t)>;

struct StabilizedPrefix {
  Word word;
  bool stable = false;
};

// Doubles the prefix length from 4(n_max+1) until C(0..n_max+1) is
// unchanged across one doubling, or len_cap is reached.
StabilizedPrefix stabilized_prefix(const PrefixGenerator& generator, std::size_t n_max, std::size_t len_cap);

// ---------------------------------------------------------------------------
// Exact factor languages of morphic words.

// Factors of length <= max_len of the fixed point of `m` from `seed`,
// grouped by length (level 0 holds the empty word).
std::vector<std::vector<std::string>> fixed_point_language(const Morphism& m, Letter seed,
                                                           std::size_t max_len);

// Factors of length <= max_len of tau(x), given the language of x up to
// at least max_len.
std::vector<std::vector<std::string>> image_language(const Morphism& tau,
                                                     const std::vector<std::vector<std::string>>& base,
                                                     std::size_t max_len);

}  // namespace palrich
