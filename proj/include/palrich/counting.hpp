#pragma once

// Exact counts: finite Sturmian words, Sturmian palindromes, rich words.
// Formulas come with enumeration oracles that must agree with them.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace palrich {

using Count = std::uint64_t;

// Trial division; OutOfRange for 0.
Count totient(Count i);

// c(n) = 1 + sum_{i=1}^n (n+1-i) phi(i). Overflow is checked.
Count sturmian_count(std::size_t n);

// p(n) = 1 + sum_{i=0}^{ceil(n/2)-1} phi(n-2i); asserts agreement with the
// split even/odd form (Inconsistent otherwise). p(0) = 1.
Count sturmian_palindrome_count(std::size_t n);
Count sturmian_palindrome_count_split(std::size_t n);

inline constexpr std::size_t kMaxBalancedLength = 22;

// Balanced binary words over {a, b}, sorted. TooLarge if n > 22.
std::vector<std::string> enumerate_balanced(std::size_t n);
// Palindromes among enumerate_balanced(n).
Count sturmian_palindrome_enumeration_oracle(std::size_t n);

// p(2n)+p(2n+1) = c(2n+1)-c(2n)+2 for 0 <= n <= n_max.
bool verify_c_identity(std::size_t n_max);

// Largest n for count_rich per alphabet size 2, 3, 4.
std::size_t max_rich_length(std::size_t alphabet_size);

// Rich words of length n over k letters by depth-first extension on an
// eertree; a branch dies as soon as a letter adds no new palindrome.
// Words starting with the first letter are counted and multiplied by k.
// UnsupportedAlphabet unless 2 <= k <= 4; TooLarge past max_rich_length.
Count count_rich(std::size_t alphabet_size, std::size_t n, std::size_t threads = 0);

// Every word of length n checked with is_rich_by_count. TooLarge if
// k^n > 2^24.
Count count_rich_naive(std::size_t alphabet_size, std::size_t n);

enum class CountKind { kSturmian, kSturmianPalindrome, kRich, kBalancedOracle };
std::string count_kind_name(CountKind kind);

struct CountTable {
  CountKind kind = CountKind::kSturmian;
  std::size_t alphabet_size = 2;
  std::string provenance;  // "formula" or "enumeration"
  std::map<std::size_t, Count> values;

  std::string to_csv() const;  // n,count,provenance
};

// kind over n = 0..n_max (rich starts at 0 with value 1).
CountTable count_table(CountKind kind, std::size_t n_max, std::size_t alphabet_size = 2);

}  // namespace palrich
