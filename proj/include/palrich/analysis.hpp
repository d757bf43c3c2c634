#pragma once

// Checks that tie the modules together: complexity profiles and the
// equality P(n)+P(n+1) = C(n+1)-C(n)+2, the richness / equality / graph
// condition triangle for infinite words, the finite-palindrome version,
// periodicity corollaries and the a->aab complexity formula.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "palrich/factors.hpp"
#include "palrich/palindromes.hpp"
#include "palrich/rauzy.hpp"
#include "palrich/words.hpp"

namespace palrich {

inline constexpr std::size_t kDefaultNMax = 30;
inline constexpr std::size_t kDefaultPrefixCap = std::size_t{1} << 20;
// Prefix length handed to the richness checkers.
inline constexpr std::size_t kRichnessPrefix = 4096;

using Language = std::vector<std::vector<std::string>>;

// An infinite word: prefixes on demand, and optionally its exact factor
// language up to a given length.
struct WordSource {
  std::string name;
  PrefixGenerator prefix;
  std::function<Language(std::size_t max_len)> language;
  bool periodic = false;
};

// Index of F_0..F_{n_max+1}: from a stabilized prefix if one is found
// within the cap, otherwise from the exact language when available.
struct SourceIndex {
  FactorIndex index;
  bool exact = false;    // stabilized prefix or exact language
  std::string route;     // "prefix", "language" or "unstable-prefix"
  std::size_t prefix_length = 0;  // last prefix tried
};

SourceIndex index_source(const WordSource& src, std::size_t n_max, std::size_t prefix_cap = kDefaultPrefixCap);

struct ComplexityProfile {
  std::size_t n_max = 0;
  std::vector<std::size_t> C;   // 0..n_max+1
  std::vector<std::size_t> P;   // 0..n_max+1
  std::vector<long long> slack; // 0..n_max
  bool exact = false;
  bool reversal_closed = false;  // to depth n_max+1
};

ComplexityProfile profile(const FactorIndex& idx, bool exact);
ComplexityProfile profile(const Word& w, std::size_t n_max);

struct EqualityCheck {
  bool holds = true;
  std::optional<std::size_t> first_failure;
};
EqualityCheck equality_II_check(const ComplexityProfile& p);

// slack(n) >= 0 for all n; NotApplicable unless reversal-closed.
bool inequality_bound_check(const ComplexityProfile& p);

// Graph-side facts at one order.
struct OrderRecord {
  std::size_t n = 0;
  long long slack = 0;
  bool equality = false;
  bool cycle_order = false;  // no special factors
  bool condition1 = true;    // simple paths v -> reverse(v) palindromic
  bool condition2 = true;    // super-reduced graph is a tree
  std::optional<std::string> condition1_witness;
  std::size_t s = 0;
  std::size_t super_edges = 0;
  std::size_t loops = 0;
  std::size_t nonpalindromic_paths = 0;
  std::optional<PathCountingIdentity> counting;
  bool conditions() const { return condition1 && condition2; }
};

OrderRecord order_record(const FactorIndex& idx, const ComplexityProfile& p, std::size_t n);

struct RichnessSummary {
  std::size_t checked_length = 0;
  bool incremental = false;
  bool returns = false;
  bool count = false;
  std::optional<std::size_t> first_violation_prefix;
  std::optional<std::pair<std::string, std::string>> witness;
  std::size_t defect = 0;
  bool agree() const { return incremental == returns && returns == count; }
};

RichnessSummary richness_summary(const Word& prefix);

enum class Verdict { kConsistent, kDiscrepancy, kInconclusive, kNotApplicable };
std::string verdict_name(Verdict v);

struct TheoremReport {
  std::string name;
  std::size_t n_max = 0;
  std::string route;
  std::size_t prefix_length = 0;
  bool exact = false;
  bool reversal_closed = false;
  std::optional<std::string> closure_witness;
  RichnessSummary richness;
  bool rich = false;
  ComplexityProfile complexity;
  EqualityCheck equality;
  bool conditions_all = true;
  std::optional<std::size_t> first_condition_failure;
  std::vector<OrderRecord> orders;
  std::vector<std::string> discrepancies;
  Verdict verdict = Verdict::kInconclusive;
  // The three verdicts agree overall and, at each order, equality agrees
  // with the graph conditions.
  bool triangle_closes() const;
};

TheoremReport theorem1_experiment(const WordSource& src, std::size_t n_max = kDefaultNMax,
                                  std::size_t prefix_cap = kDefaultPrefixCap);

struct Theorem2Report {
  bool palindrome_count = false;  // |w|+1 distinct palindromes
  bool returns = false;           // complete returns to palindromes are palindromes
  bool equality = false;          // equality for 0 <= i <= |w|
  bool agree() const { return palindrome_count == returns && returns == equality; }
};

// NotAPalindrome unless w is a palindrome.
Theorem2Report theorem2_check(const Word& w);

struct PeriodicityCheck {
  bool consistent = false;
  std::optional<std::size_t> witness_n;  // least n with P(n)+P(n+1) = 2
};
PeriodicityCheck corollary_periodicity(const ComplexityProfile& p, bool periodic_hint);

struct EventualPeriodCheck {
  std::optional<std::size_t> p_from;  // P(n+2) = P(n) from here on
  std::optional<std::size_t> c_from;  // C(n+1)-C(n) constant from here on
  bool p_periodic() const { return p_from.has_value(); }
  bool c_affine() const { return c_from.has_value(); }
  bool agree() const { return p_periodic() == c_affine(); }
};
// WindowTooShort if n_max < 8. Onsets are searched in the first half of
// the window.
EventualPeriodCheck corollary_eventual_period2(const ComplexityProfile& p);

struct CassaigneRow {
  std::size_t n = 0;
  long long palindromes = 0;  // P(n)+P(n+1)-2
  long long complexity = 0;   // C(n+1)-C(n)
  long long formula = 0;      // n+1 - #{k>0 : 2^k+k-2 < n}
};
struct CassaigneCheck {
  bool holds = true;
  std::string route;
  std::vector<CassaigneRow> rows;
};
long long cassaigne_formula(std::size_t n);
CassaigneCheck cassaigne_formula_check(std::size_t n_max, std::size_t prefix_cap = kDefaultPrefixCap);

// ---------------------------------------------------------------- sources

WordSource fibonacci_source();
WordSource tribonacci_source();
WordSource thue_morse_source();
WordSource cassaigne_source();      // a->aab, b->b
WordSource quadratic_source();      // a->abab, b->b
WordSource morphic_source(const std::string& spec, char seed = 'a');
WordSource psi_of_fibonacci_source(std::size_t k);  // a->aa b^k aabab, b->bab applied to f
WordSource periodic_source(const std::string& block);
WordSource periodic_family_source(std::size_t k);   // (aa b^k aabab)^omega
WordSource s_word_source();
WordSource episturmian_source(const std::string& directive_pattern);

}  // namespace palrich
