#pragma once

// Palindromic factors: eertree, palindromic complexity, richness checkers
// and the v / reverse(v) occurrence properties of rich words.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "palrich/factors.hpp"
#include "palrich/words.hpp"

namespace palrich {

// Palindromic tree with push/pop at the end of the text. Node 0 is the
// length -1 root, node 1 the empty palindrome.
class Eertree {
 public:
  explicit Eertree(Alphabet alphabet);

  // Appends a letter; true iff a new palindrome appeared.
  bool push_back(Letter c);
  // Undoes the last push_back.
  void pop_back();

  std::size_t size() const noexcept { return text_.size(); }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::string_view letters() const noexcept { return text_; }

  std::size_t node_count() const noexcept { return len_.size(); }
  // Distinct non-empty palindromic factors.
  std::size_t distinct_palindromes() const noexcept { return len_.size() - 2; }

  int length(std::size_t node) const { return len_.at(node); }
  std::size_t suffix_link(std::size_t node) const { return link_.at(node); }
  // Prefix length at which the node's palindrome first appeared.
  std::size_t first_end(std::size_t node) const { return first_end_.at(node); }
  std::string palindrome(std::size_t node) const;
  std::optional<std::size_t> child(std::size_t node, Letter c) const;

  // Node of the longest palindromic suffix of w[1..i], 1 <= i <= size().
  std::size_t suffix_node(std::size_t i) const;

  // Occurrence count of each node's palindrome in the whole text.
  std::vector<std::size_t> occurrence_counts() const;

 private:
  struct Undo {
    std::uint32_t prev_last;
    std::uint32_t parent;  // UINT32_MAX when no node was created
  };

  std::uint32_t find_extendable(std::uint32_t node, std::size_t pos, Letter c) const;

  Alphabet alphabet_;
  std::size_t sigma_;
  std::string text_;
  std::vector<int> len_;
  std::vector<std::uint32_t> link_;
  std::vector<std::uint32_t> first_end_;
  std::vector<std::uint32_t> next_;  // node * sigma + letter, UINT32_MAX = none
  std::vector<std::uint32_t> ends_here_;
  std::vector<std::uint32_t> suffix_node_;  // per prefix length
  std::vector<Undo> undo_;
};

Eertree build_eertree(const Word& w);

// P(n); P(0) = 1 for the empty palindrome. Requires n <= |w|.
std::size_t palindromic_complexity(const Eertree& t, std::size_t n);
// P(0..|w|).
std::vector<std::size_t> palindromic_counts(const Eertree& t);

Word longest_palindromic_suffix(const Eertree& t, std::size_t i);

struct RichnessReport {
  bool rich = true;
  std::optional<std::size_t> first_violation_prefix;  // 1-based prefix length
  std::optional<std::pair<Word, Word>> witness;       // palindrome, non-palindromic complete return
  std::size_t defect = 0;
};

RichnessReport is_rich_incremental(const Word& w);
// Quadratic: tests every complete return to every repeated palindrome.
RichnessReport is_rich_by_returns(const Word& w);
bool is_rich_by_count(const Word& w);

// Distinct palindromic factors including the empty word, found by center
// expansion (independent of the eertree).
std::size_t count_distinct_palindromes(const Word& w);

struct SpanCheck {
  bool holds = true;
  std::optional<Word> counterexample;
};

// Every span from an occurrence of v to the next occurrence of reverse(v),
// with no occurrence of either starting in between, must be a palindrome.
// Spans from reverse(v) to v are checked too.
SpanCheck check_v2reverse(const FactorIndex& idx, const Word& v);

// Occurrences of v and reverse(v), merged by start, strictly alternate.
bool check_alternation(const FactorIndex& idx, const Word& v);

}  // namespace palrich
