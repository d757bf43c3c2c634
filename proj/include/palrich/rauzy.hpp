#pragma once

// Rauzy graphs of order n, their simple-path contraction, and the quotient
// by reversal classes, with the path properties used by the richness
// characterization.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "palrich/factors.hpp"
#include "palrich/words.hpp"

namespace palrich {

struct RauzyGraph {
  struct Edge {
    std::uint32_t from = 0;
    std::uint32_t to = 0;
    std::string word;  // the (n+1)-factor
  };

  std::size_t n = 0;
  Alphabet alphabet;
  std::vector<std::string> vertices;  // sorted
  std::vector<Edge> edges;            // sorted by word
  std::vector<std::vector<std::uint32_t>> out, in;  // edge ids

  std::optional<std::uint32_t> vertex_id(std::string_view v) const;
  bool is_special(std::uint32_t v) const { return out[v].size() >= 2 || in[v].size() >= 2; }
};

// Vertices F_n, edges F_{n+1}; requires n <= n_max of the index.
RauzyGraph build_rauzy(const FactorIndex& idx, std::size_t n);

struct ReducedRauzyGraph {
  struct Edge {
    std::uint32_t from = 0;  // into vertices
    std::uint32_t to = 0;
    std::string label;
  };
  // Pure cycle, for graphs without special vertices.
  struct Cycle {
    std::vector<std::string> vertices;  // starting at the least vertex
    std::string label;
  };

  std::size_t n = 0;
  Alphabet alphabet;
  std::vector<std::string> vertices;  // special factors, sorted
  std::vector<Edge> edges;            // one per simple path, sorted by (from, label)
  std::optional<Cycle> cycle;

  std::optional<std::uint32_t> vertex_id(std::string_view v) const;
  std::size_t out_degree(std::uint32_t v) const;
};

// Contracts every simple path to one labelled edge. Throws UnstableIndex if
// some vertex has no successor or some edge lies on no simple path.
ReducedRauzyGraph reduce(const RauzyGraph& g);

// Label of a walk given by its vertices.
Word path_label(const RauzyGraph& g, const std::vector<Word>& walk);
bool label_is_rich_check(const RauzyGraph& g, const std::vector<Word>& walk);

struct PathReversal {
  bool reversal_exists = false;
  bool palindromic = false;
};
PathReversal path_reversal_facts(const RauzyGraph& g, const std::vector<Word>& walk);

struct PathFacts {
  struct Fact {
    std::size_t edge = 0;  // into ReducedRauzyGraph::edges
    bool palindromic = false;
    bool reversal_present = false;
    bool to_reversal = false;  // ends at the reversal of its start
  };
  std::size_t n = 0;
  std::vector<Fact> facts;
  std::size_t nonpalindromic = 0;
};

struct SuperReducedRauzyGraph {
  struct Edge {
    std::uint32_t a = 0, b = 0;  // a < b, into classes
    std::string label;           // least of the label and its reversal
  };
  // Simple path v -> v with v not a palindrome.
  struct Loop {
    std::uint32_t cls = 0;
    std::string label;
  };

  std::size_t n = 0;
  Alphabet alphabet;
  std::vector<std::string> classes;  // least of v and reverse(v)
  std::vector<Edge> edges;           // multi-edges kept
  std::vector<Loop> loops;
  std::size_t special_count = 0;        // |S_n|
  std::size_t special_palindromes = 0;  // p
  bool reversal_closed = false;         // every special vertex has its reversal special
  bool from_cycle = false;
  std::string cycle_class;  // class of the cycle's least vertex, display only

  std::size_t s() const noexcept { return classes.size(); }
};

struct SuperReduction {
  SuperReducedRauzyGraph graph;
  PathFacts facts;
};

// Throws Inconsistent if the specials are reversal-closed but 2s - p != |S_n|.
SuperReduction super_reduce(const ReducedRauzyGraph& rg);

// Connected, s - 1 edges, no loops.
bool is_tree(const SuperReducedRauzyGraph& sg);

struct PathCondition {
  bool holds = true;
  std::optional<std::string> witness;  // label of the first offending path
};

// Every simple path from v to reverse(v) is palindromic.
PathCondition palindromic_path_condition(const ReducedRauzyGraph& rg, const PathFacts& facts);

struct PathCountingIdentity {
  long long lhs = 0;  // P(n) + P(n+1)
  long long rhs = 0;  // Σ deg⁺ over S_n - 2(s-1) + p
  // Each non-special palindrome of length n or n+1 is the central factor
  // of exactly one palindromic simple path, and special ones of none.
  bool central_factors_ok = true;
  std::optional<std::string> central_witness;
};

// NotApplicable when there are no special factors.
PathCountingIdentity path_counting_identity(const FactorIndex& idx, const ReducedRauzyGraph& rg,
                                            const SuperReduction& sr);

std::string to_dot(const RauzyGraph& g);
std::string to_dot(const ReducedRauzyGraph& rg);
std::string to_dot(const SuperReducedRauzyGraph& sg);

}  // namespace palrich
