#include "palrich/analysis.hpp"

#include <algorithm>
#include <sstream>

#include "palrich/error.hpp"

namespace palrich {

namespace {

std::string describe(const FactorIndex& idx, const std::string& letters) { return render(letters, idx.alphabet()); }

PrefixGenerator fixed_point_prefix(const Morphism& m, Letter seed) {
  return [m, seed](std::size_t len) { return fixed_point(m, seed, len); };
}

WordSource from_morphism(std::string name, const std::string& spec, char seed) {
  Morphism m = Morphism::parse(spec);
  auto s = m.alphabet().index(seed);
  if (!s) throw Error(Errc::kNotProlongable, std::string("seed '") + seed + "' not in morphism alphabet");
  Letter letter = *s;
  if (!m.prolongable(letter)) throw Error(Errc::kNotProlongable, "morphism is not prolongable on the seed");
  WordSource src;
  src.name = std::move(name);
  src.prefix = fixed_point_prefix(m, letter);
  src.language = [m, letter](std::size_t max_len) { return fixed_point_language(m, letter, max_len); };
  return src;
}

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kConsistent: return "consistent";
    case Verdict::kDiscrepancy: return "discrepancy";
    case Verdict::kInconclusive: return "inconclusive";
    case Verdict::kNotApplicable: return "not-applicable";
  }
  return "?";
}

// ------------------------------------------------------------------ index

SourceIndex index_source(const WordSource& src, std::size_t n_max, std::size_t prefix_cap) {
  StabilizedPrefix sp = stabilized_prefix(src.prefix, n_max, prefix_cap);
  Language lang;
  if (src.language) lang = src.language(n_max + 1);
  if (sp.stable) {
    FactorIndex idx = FactorIndex::build(sp.word, n_max);
    // One unchanged doubling can be a plateau; trust the exact language.
    bool agrees = true;
    for (std::size_t n = 0; n <= n_max + 1 && src.language; ++n) agrees = agrees && lang[n].size() == idx.factors(n).size();
    if (agrees) return {std::move(idx), true, "prefix", sp.word.size()};
  }
  if (src.language) {
    return {FactorIndex::from_language(sp.word.alphabet(), std::move(lang)), true, "language", sp.word.size()};
  }
  return {FactorIndex::build(sp.word, n_max), false, "unstable-prefix", sp.word.size()};
}

// ---------------------------------------------------------------- profile

ComplexityProfile profile(const FactorIndex& idx, bool exact) {
  ComplexityProfile p;
  p.n_max = idx.n_max();
  p.exact = exact;
  for (std::size_t n = 0; n <= p.n_max + 1; ++n) {
    auto f = idx.factors(n);
    p.C.push_back(f.size());
    p.P.push_back(static_cast<std::size_t>(std::count_if(f.begin(), f.end(), [](const std::string& x) {
      return is_palindrome(x);
    })));
  }
  for (std::size_t n = 0; n <= p.n_max; ++n) {
    long long bound = static_cast<long long>(p.C[n + 1]) - static_cast<long long>(p.C[n]) + 2;
    p.slack.push_back(bound - static_cast<long long>(p.P[n] + p.P[n + 1]));
  }
  p.reversal_closed = is_closed_under_reversal(idx, p.n_max + 1).closed;
  return p;
}

ComplexityProfile profile(const Word& w, std::size_t n_max) { return profile(FactorIndex::build(w, n_max), false); }

EqualityCheck equality_II_check(const ComplexityProfile& p) {
  EqualityCheck c;
  for (std::size_t n = 0; n < p.slack.size(); ++n) {
    if (p.slack[n] != 0) {
      c.holds = false;
      c.first_failure = n;
      break;
    }
  }
  return c;
}

bool inequality_bound_check(const ComplexityProfile& p) {
  if (!p.reversal_closed) throw Error(Errc::kNotApplicable, "factors are not closed under reversal");
  return std::all_of(p.slack.begin(), p.slack.end(), [](long long s) { return s >= 0; });
}

// ------------------------------------------------------------ per order

OrderRecord order_record(const FactorIndex& idx, const ComplexityProfile& p, std::size_t n) {
  OrderRecord r;
  r.n = n;
  r.slack = p.slack.at(n);
  r.equality = r.slack == 0;
  RauzyGraph g = build_rauzy(idx, n);
  ReducedRauzyGraph rg = reduce(g);
  if (rg.cycle) {
    r.cycle_order = true;
    return r;
  }
  SuperReduction sr = super_reduce(rg);
  PathCondition c1 = palindromic_path_condition(rg, sr.facts);
  r.condition1 = c1.holds;
  if (c1.witness) r.condition1_witness = describe(idx, *c1.witness);
  r.condition2 = is_tree(sr.graph);
  r.s = sr.graph.s();
  r.super_edges = sr.graph.edges.size();
  r.loops = sr.graph.loops.size();
  r.nonpalindromic_paths = sr.facts.nonpalindromic;
  r.counting = path_counting_identity(idx, rg, sr);
  if (r.counting->central_witness) r.counting->central_witness = describe(idx, *r.counting->central_witness);
  return r;
}

RichnessSummary richness_summary(const Word& prefix) {
  RichnessSummary s;
  s.checked_length = prefix.size();
  RichnessReport inc = is_rich_incremental(prefix);
  RichnessReport ret = is_rich_by_returns(prefix);
  s.incremental = inc.rich;
  s.returns = ret.rich;
  s.count = is_rich_by_count(prefix);
  s.first_violation_prefix = inc.first_violation_prefix;
  s.defect = inc.defect;
  if (ret.witness) s.witness = std::make_pair(ret.witness->first.str(), ret.witness->second.str());
  return s;
}

// ---------------------------------------------------- infinite-word experiment

bool TheoremReport::triangle_closes() const {
  return exact && discrepancies.empty() && rich == equality.holds && equality.holds == conditions_all;
}

TheoremReport theorem1_experiment(const WordSource& src, std::size_t n_max, std::size_t prefix_cap) {
  TheoremReport rep;
  rep.name = src.name;
  rep.n_max = n_max;
  SourceIndex si = index_source(src, n_max, prefix_cap);
  rep.route = si.route;
  rep.prefix_length = si.prefix_length;
  rep.exact = si.exact;
  const FactorIndex& idx = si.index;

  ClosureCheck closure = is_closed_under_reversal(idx, n_max + 1);
  rep.reversal_closed = closure.closed;
  if (closure.witness) rep.closure_witness = closure.witness->str();

  rep.richness = richness_summary(src.prefix(kRichnessPrefix));
  rep.rich = rep.richness.incremental;
  rep.complexity = profile(idx, si.exact);
  rep.equality = equality_II_check(rep.complexity);

  auto flag = [&](const std::string& what) {
    if (rep.exact) rep.discrepancies.push_back(what);
  };
  if (!rep.richness.agree()) flag("richness checkers disagree");
  for (std::size_t n = 0; n <= n_max; ++n) {
    OrderRecord r;
    try {
      r = order_record(idx, rep.complexity, n);
    } catch (const Error& e) {
      if (rep.exact) throw;
      rep.verdict = Verdict::kInconclusive;
      return rep;
    }
    if (!r.conditions() && !rep.first_condition_failure) rep.first_condition_failure = n;
    if (rep.reversal_closed) {
      if (r.equality != r.conditions()) {
        std::ostringstream os;
        os << "order " << n << ": equality " << r.equality << " but conditions " << r.conditions();
        flag(os.str());
      }
      if (r.cycle_order && !r.equality) flag("order " + std::to_string(n) + ": cycle order without equality");
      if (r.slack < 0) flag("order " + std::to_string(n) + ": upper bound exceeded");
      if (r.counting && r.equality && (r.counting->lhs != r.counting->rhs || !r.counting->central_factors_ok)) {
        flag("order " + std::to_string(n) + ": path counting identity fails");
      }
    }
    rep.orders.push_back(std::move(r));
  }
  rep.conditions_all = !rep.first_condition_failure;

  if (rep.reversal_closed && !(rep.rich == rep.equality.holds && rep.equality.holds == rep.conditions_all)) {
    flag("richness, equality and graph conditions disagree");
  }
  if (!rep.exact) {
    rep.verdict = Verdict::kInconclusive;
  } else if (!rep.reversal_closed) {
    rep.verdict = Verdict::kNotApplicable;
  } else {
    rep.verdict = rep.discrepancies.empty() ? Verdict::kConsistent : Verdict::kDiscrepancy;
  }
  return rep;
}

// ------------------------------------------------------- finite palindromes

Theorem2Report theorem2_check(const Word& w) {
  if (!is_palindrome(w)) throw Error(Errc::kNotAPalindrome, "'" + w.str() + "' is not a palindrome");
  Theorem2Report r;
  const std::size_t m = w.size();
  r.palindrome_count = build_eertree(w).distinct_palindromes() + 1 == m + 1;
  r.returns = is_rich_by_returns(w).rich;
  std::vector<std::size_t> C(m + 2, 0), P(m + 2, 0);
  C[0] = P[0] = 1;
  if (m > 0) {
    auto idx = FactorIndex::build(w, m - 1);
    for (std::size_t i = 1; i <= m; ++i) {
      auto f = idx.factors(i);
      C[i] = f.size();
      P[i] = static_cast<std::size_t>(
          std::count_if(f.begin(), f.end(), [](const std::string& x) { return is_palindrome(x); }));
    }
  }
  r.equality = true;
  for (std::size_t i = 0; i <= m; ++i) {
    long long lhs = static_cast<long long>(P[i] + P[i + 1]);
    long long rhs = static_cast<long long>(C[i + 1]) - static_cast<long long>(C[i]) + 2;
    if (lhs != rhs) r.equality = false;
  }
  return r;
}

// ------------------------------------------------------------ corollaries

PeriodicityCheck corollary_periodicity(const ComplexityProfile& p, bool periodic_hint) {
  PeriodicityCheck c;
  for (std::size_t n = 0; n <= p.n_max; ++n) {
    if (p.P[n] + p.P[n + 1] == 2) {
      c.witness_n = n;
      break;
    }
  }
  c.consistent = c.witness_n.has_value() == periodic_hint;
  return c;
}

EventualPeriodCheck corollary_eventual_period2(const ComplexityProfile& p) {
  if (p.n_max < 8) throw Error(Errc::kWindowTooShort, "eventual periodicity needs n_max >= 8");
  const std::size_t last = p.n_max + 1;
  const std::size_t half = last / 2;
  EventualPeriodCheck c;
  for (std::size_t N = 0; N <= half && !c.p_from; ++N) {
    bool ok = true;
    for (std::size_t n = N; n + 2 <= last && ok; ++n) ok = p.P[n + 2] == p.P[n];
    if (ok) c.p_from = N;
  }
  for (std::size_t N = 0; N <= half && !c.c_from; ++N) {
    bool ok = true;
    for (std::size_t n = N; n + 2 <= last && ok; ++n) ok = p.C[n + 2] - p.C[n + 1] == p.C[n + 1] - p.C[n];
    if (ok) c.c_from = N;
  }
  return c;
}

long long cassaigne_formula(std::size_t n) {
  long long count = 0;
  for (std::size_t k = 1; k < 63; ++k) {
    unsigned long long v = (1ULL << k) + k - 2;
    if (v < n) ++count;
    else break;
  }
  return static_cast<long long>(n) + 1 - count;
}

CassaigneCheck cassaigne_formula_check(std::size_t n_max, std::size_t prefix_cap) {
  SourceIndex si = index_source(cassaigne_source(), n_max, prefix_cap);
  if (!si.exact) throw Error(Errc::kStabilizationFailed, "no exact factor set for a->aab, b->b");
  ComplexityProfile p = profile(si.index, true);
  CassaigneCheck c;
  c.route = si.route;
  for (std::size_t n = 1; n <= n_max; ++n) {
    CassaigneRow row;
    row.n = n;
    row.palindromes = static_cast<long long>(p.P[n] + p.P[n + 1]) - 2;
    row.complexity = static_cast<long long>(p.C[n + 1]) - static_cast<long long>(p.C[n]);
    row.formula = cassaigne_formula(n);
    if (row.palindromes != row.complexity || row.complexity != row.formula) c.holds = false;
    c.rows.push_back(row);
  }
  return c;
}

// ---------------------------------------------------------------- sources

WordSource fibonacci_source() { return from_morphism("fibonacci", "a->ab,b->a", 'a'); }

WordSource tribonacci_source() {
  WordSource src = from_morphism("tribonacci", "a->ab,b->ac,c->a", 'a');
  src.prefix = [](std::size_t len) { return episturmian_word(DirectiveSequence::cyclic("abc", 128), len); };
  return src;
}

WordSource thue_morse_source() { return from_morphism("thue-morse", "a->ab,b->ba", 'a'); }
WordSource cassaigne_source() { return from_morphism("cassaigne-aab", "a->aab,b->b", 'a'); }
WordSource quadratic_source() { return from_morphism("quadratic-abab", "a->abab,b->b", 'a'); }

WordSource morphic_source(const std::string& spec, char seed) {
  return from_morphism("morphic:" + spec, spec, seed);
}

WordSource psi_of_fibonacci_source(std::size_t k) {
  const Alphabet ab("ab");
  Morphism psi(ab, {std::string(Word::parse("aa" + std::string(k, 'b') + "aabab", ab).letters()),
                    std::string(Word::parse("bab", ab).letters())});
  Morphism phi = Morphism::parse("a->ab,b->a");
  WordSource src;
  src.name = "psi-of-fibonacci:" + std::to_string(k);
  src.prefix = [psi, phi](std::size_t len) {
    Word f = fixed_point(phi, Letter{0}, len / 3 + 2);
    return psi.apply(f).prefix(len);
  };
  src.language = [psi, phi](std::size_t max_len) {
    return image_language(psi, fixed_point_language(phi, 0, max_len), max_len);
  };
  return src;
}

WordSource periodic_source(const std::string& block) {
  Word b = Word::parse(block);
  if (b.empty()) throw Error(Errc::kEmptyBlock, "periodic block must be non-empty");
  WordSource src;
  src.name = "periodic:" + block;
  src.prefix = [b](std::size_t len) { return periodic_word(b, len); };
  src.periodic = true;
  return src;
}

WordSource periodic_family_source(std::size_t k) {
  WordSource src = periodic_source("aa" + std::string(k, 'b') + "aabab");
  src.name = "periodic-family:" + std::to_string(k);
  return src;
}

WordSource s_word_source() {
  WordSource src;
  src.name = "s-word";
  src.prefix = [](std::size_t len) { return s_word(len); };
  // s is tau(x) without its first two letters, for x the a->aab, b->b
  // fixed point and tau: a->aabc, b->a; both have the same factors.
  src.language = [](std::size_t max_len) {
    Morphism cas = Morphism::parse("a->aab,b->b");
    Morphism tau = Morphism::parse("a->aabc,b->a,c->c");
    return image_language(tau, fixed_point_language(cas, 0, max_len), max_len);
  };
  return src;
}

WordSource episturmian_source(const std::string& directive_pattern) {
  if (directive_pattern.empty()) throw Error(Errc::kInvalidArgument, "directive must be non-empty");
  DirectiveSequence::parse(directive_pattern);
  WordSource src;
  src.name = "episturmian:" + directive_pattern;
  src.prefix = [directive_pattern](std::size_t len) {
    // Each closure step adds at least one letter.
    return episturmian_word(DirectiveSequence::cyclic(directive_pattern, len + 1), len);
  };
  return src;
}

}  // namespace palrich
