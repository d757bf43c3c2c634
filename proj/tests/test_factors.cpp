#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "palrich/error.hpp"
#include "palrich/factors.hpp"

using namespace palrich;

namespace {

Word fib(std::size_t len) { return fixed_point(Morphism::parse("a->ab,b->a"), 'a', len); }
Word thue(std::size_t len) { return fixed_point(Morphism::parse("a->ab,b->ba"), 'a', len); }
Word trib(std::size_t len) { return episturmian_word(DirectiveSequence::cyclic("abc", 64), len); }

std::set<std::string> printed(const FactorIndex& idx, std::size_t n) {
  std::set<std::string> out;
  for (const auto& f : idx.factors(n)) out.insert(render(f, idx.alphabet()));
  return out;
}

std::vector<std::string> printed(const std::vector<std::string>& v, const FactorIndex& idx) {
  std::vector<std::string> out;
  for (const auto& f : v) out.push_back(render(f, idx.alphabet()));
  return out;
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::kInconsistent;
}

}  // namespace

TEST_CASE("index examples") {
  auto idx = FactorIndex::build(Word::parse("abaab"), 2);
  CHECK(printed(idx, 2) == std::set<std::string>{"aa", "ab", "ba"});
  auto unary = FactorIndex::build(Word::parse("aaaa"), 2);
  for (std::size_t n = 0; n <= 3; ++n) CHECK(factor_complexity(unary, n) == 1);
  auto abca = FactorIndex::build(Word::parse("abca"), 2);
  CHECK(printed(abca, 2) == std::set<std::string>{"ab", "bc", "ca"});
  CHECK(code_of([] { FactorIndex::build(Word::parse("abc"), 3); }) == Errc::kWordTooShort);
  CHECK(code_of([&] { idx.factors(4); }) == Errc::kOutOfRange);
}

TEST_CASE("index agrees with window enumeration") {
  std::mt19937 rng(3);
  for (int t = 0; t < 120; ++t) {
    std::size_t len = 1 + rng() % 200;
    std::size_t sigma = 1 + rng() % 3;
    std::string s;
    for (std::size_t i = 0; i < len; ++i) s.push_back(static_cast<char>('a' + rng() % sigma));
    Word w = Word::parse(s);
    std::size_t n_max = std::min<std::size_t>(len - 1, 12);
    auto idx = FactorIndex::build(w, n_max);
    auto counts = factor_counts(w, n_max);
    for (std::size_t n = 0; n <= n_max + 1; ++n) {
      auto expected = oracle::factors(s, n);
      REQUIRE(printed(idx, n) == expected);
      REQUIRE(counts[n] == expected.size());
      for (std::size_t id = 0; id < idx.factors(n).size(); ++id) {
        std::string f = render(idx.factors(n)[id], idx.alphabet());
        auto occ = idx.occurrences(n, id);
        REQUIRE(std::vector<std::size_t>(occ.begin(), occ.end()) == oracle::positions(s, f));
        if (n > n_max) continue;
        std::size_t right = 0, left = 0;
        for (char c : w.alphabet().symbols()) {
          right += oracle::count_occurrences(s, f + c) > 0;
          left += oracle::count_occurrences(s, std::string(1, c) + f) > 0;
        }
        REQUIRE(idx.out_degree(n, id) == right);
        REQUIRE(idx.in_degree(n, id) == left);
      }
    }
  }
}

TEST_CASE("degree sums equal the next complexity") {
  for (const Word& w : {fib(3000), thue(3000), trib(3000)}) {
    auto idx = FactorIndex::build(w, 20);
    for (std::size_t n = 0; n <= 20; ++n) {
      std::size_t out = 0, in = 0;
      for (std::size_t id = 0; id < idx.factors(n).size(); ++id) {
        out += idx.out_degree(n, id);
        in += idx.in_degree(n, id);
      }
      CHECK(out == idx.factors(n + 1).size());
      CHECK(in == idx.factors(n + 1).size());
      CHECK(idx.factors(n + 1).size() <= idx.factors(n).size() * w.alphabet().size());
    }
  }
}

TEST_CASE("complexities of the standard families") {
  auto f = FactorIndex::build(fib(1000), 10);
  for (std::size_t n = 0; n <= 11; ++n) CHECK(factor_complexity(f, n) == n + 1);
  CHECK(factor_complexity(f, 7) == 8);
  auto t = FactorIndex::build(trib(2000), 12);
  CHECK(factor_complexity(t, 10) == 21);
  for (std::size_t n = 0; n <= 13; ++n) CHECK(factor_complexity(t, n) == 2 * n + 1);
}

TEST_CASE("special factors") {
  auto f = FactorIndex::build(fib(1000), 10);
  auto r = special_factors(f, 2);
  CHECK(printed(r.right_special, f) == std::vector<std::string>{"ba"});
  CHECK(printed(r.left_special, f) == std::vector<std::string>{"ab"});
  CHECK(r.bispecial.empty());
  CHECK(r.special_count == 2);
  CHECK(r.special_palindromes == 0);
  auto r1 = special_factors(f, 1);
  CHECK(printed(r1.bispecial, f) == std::vector<std::string>{"a"});
  CHECK(r1.special_palindromes == 1);

  auto unary = FactorIndex::build(Word::parse("aaaa"), 2);
  CHECK(special_factors(unary, 1).special_count == 0);

  // Thue-Morse: F_3 = {aab, aba, abb, baa, bab, bba}, so ab and ba are
  // right special, ab and ba left special.
  auto t = FactorIndex::build(thue(512), 8);
  auto rt = special_factors(t, 2);
  CHECK(printed(rt.right_special, t) == std::vector<std::string>{"ab", "ba"});
  CHECK(printed(rt.left_special, t) == std::vector<std::string>{"ab", "ba"});
  CHECK(printed(rt.bispecial, t) == std::vector<std::string>{"ab", "ba"});
  CHECK(code_of([&] { special_factors(t, 9); }) == Errc::kOutOfRange);
}

TEST_CASE("complexity difference identity") {
  auto f = FactorIndex::build(fib(1000), 10);
  CHECK(complexity_difference_identity(f, 5) == std::pair<long long, long long>{1, 1});
  auto unary = FactorIndex::build(Word::parse(std::string(40, 'a')), 10);
  for (std::size_t n = 0; n <= 10; ++n) CHECK(complexity_difference_identity(unary, n) == std::pair<long long, long long>{0, 0});
  auto t = FactorIndex::build(trib(2000), 12);
  CHECK(complexity_difference_identity(t, 4) == std::pair<long long, long long>{2, 2});
  auto m = FactorIndex::build(thue(4096), 20);
  for (std::size_t n = 0; n <= 20; ++n) {
    auto [lhs, rhs] = complexity_difference_identity(m, n);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("complete returns") {
  Word w = fib(200);
  auto idx = FactorIndex::build(w, 10);
  auto aa = complete_returns(idx, Word::parse("aa", w.alphabet()));
  std::set<std::string> distinct;
  for (const auto& r : aa.distinct) distinct.insert(r.str());
  CHECK(distinct.count("aabaa") == 1);
  CHECK(distinct.count("aababaa") == 1);
  auto pos = oracle::positions(w.str(), "aa");
  CHECK(pos[0] + 1 == 3);
  CHECK(pos[1] + 1 == 8);
  CHECK(pos[2] + 1 == 11);
  CHECK(pos[3] + 1 == 16);
  std::vector<std::string> in_order;
  for (const auto& r : aa.in_order) in_order.push_back(r.str());
  CHECK(in_order == oracle::returns(w.str(), "aa"));

  auto abca = FactorIndex::build(Word::parse("abca"), 2);
  auto ra = complete_returns(abca, Word::parse("a"));
  REQUIRE(ra.distinct.size() == 1);
  CHECK(ra.distinct[0].str() == "abca");
  auto aaa = FactorIndex::build(Word::parse("aaa"), 1);
  auto r3 = complete_returns(aaa, Word::parse("a"));
  CHECK(r3.in_order.size() == 2);
  REQUIRE(r3.distinct.size() == 1);
  CHECK(r3.distinct[0].str() == "aa");

  CHECK(code_of([&] { complete_returns(abca, Word::parse("b")); }) == Errc::kSingleOccurrence);
  CHECK(code_of([&] { complete_returns(abca, Word::parse("cb")); }) == Errc::kFactorAbsent);
  CHECK(code_of([&] { complete_returns(abca, Word::parse("d")); }) == Errc::kParseError);

  // Every return starts and ends with u and holds exactly two occurrences.
  for (const auto& u : {"a", "ab", "aba", "baab"}) {
    for (const auto& r : complete_returns(idx, Word::parse(u, w.alphabet())).distinct) {
      CHECK(oracle::count_occurrences(r.str(), u) == 2);
      CHECK(r.str().rfind(u, 0) == 0);
    }
  }
}

TEST_CASE("reversal closure") {
  auto f = FactorIndex::build(fib(2048), 20);
  CHECK(is_closed_under_reversal(f, 10).closed);
  auto s = FactorIndex::build(s_word(500), 8);
  auto c = is_closed_under_reversal(s, 3);
  CHECK_FALSE(c.closed);
  REQUIRE(c.witness);
  CHECK(c.witness->str() == "bca");
  CHECK_FALSE(s.contains(reversed(c.witness->letters())));
  CHECK(is_closed_under_reversal(FactorIndex::build(Word::parse("aaaa"), 2), 2).closed);
}

TEST_CASE("recurrence probe") {
  CHECK(recurrence_probe(FactorIndex::build(fib(10000), 10), 10, 3));
  CHECK_FALSE(recurrence_probe(FactorIndex::build(Word::parse("abbbb"), 2), 1, 2));
  CHECK(recurrence_probe(FactorIndex::build(periodic_word(Word::parse("ab"), 100), 3), 2, 5));
}

TEST_CASE("stabilized prefixes") {
  auto f = stabilized_prefix([](std::size_t len) { return fib(len); }, 20, 1u << 20);
  CHECK(f.stable);
  CHECK(f.word.size() <= 2048);
  auto u = stabilized_prefix([](std::size_t len) { return Word::parse(std::string(len, 'a')); }, 5, 1000);
  CHECK(u.stable);
  CHECK(u.word.size() == 48);
  CHECK(code_of([] { stabilized_prefix([](std::size_t len) { return fib(len); }, 20, 50); }) ==
        Errc::kInvalidArgument);
  // a -> aab, b -> b: b^n first shows up near position 2^n, so a 2^20
  // prefix cannot settle the factors of length 31.
  Morphism cas = Morphism::parse("a->aab,b->b");
  auto c = stabilized_prefix([&](std::size_t len) { return fixed_point(cas, 'a', len); }, 30, 1u << 20);
  CHECK_FALSE(c.stable);
  auto c12 = stabilized_prefix([&](std::size_t len) { return fixed_point(cas, 'a', len); }, 12, 1u << 20);
  CHECK(c12.stable);
}

TEST_CASE("fixed point languages") {
  Morphism fm = Morphism::parse("a->ab,b->a");
  auto lang = fixed_point_language(fm, 0, 21);
  auto idx = FactorIndex::build(fib(1 << 14), 20);
  for (std::size_t n = 0; n <= 21; ++n) {
    REQUIRE(std::vector<std::string>(idx.factors(n).begin(), idx.factors(n).end()) == lang[n]);
  }

  // Non-uniformly recurrent fixed points: compare against a long prefix
  // at lengths where that prefix has settled.
  for (const char* spec : {"a->aab,b->b", "a->abab,b->b", "a->aba,b->bb"}) {
    Morphism m = Morphism::parse(spec);
    auto l = fixed_point_language(m, 0, 14);
    auto p = FactorIndex::build(fixed_point(m, 'a', 1 << 20), 13);
    for (std::size_t n = 0; n <= 14; ++n) {
      CAPTURE(spec);
      CAPTURE(n);
      REQUIRE(std::vector<std::string>(p.factors(n).begin(), p.factors(n).end()) == l[n]);
    }
  }

  auto li = FactorIndex::from_language(fm.alphabet(), lang);
  CHECK(li.n_max() == 20);
  CHECK_FALSE(li.has_occurrences());
  CHECK(code_of([&] { li.occurrences(3, 0); }) == Errc::kNoOccurrenceData);
  for (std::size_t n = 0; n <= 20; ++n) {
    for (std::size_t id = 0; id < li.factors(n).size(); ++id) {
      CHECK(li.right_extensions(n, id) == idx.right_extensions(n, id));
      CHECK(li.left_extensions(n, id) == idx.left_extensions(n, id));
    }
  }
}

TEST_CASE("image languages") {
  // tau(a -> aab, b -> b fixed point) with tau: a -> aabc, b -> a is aa s.
  Morphism cas = Morphism::parse("a->aab,b->b");
  Morphism tau = Morphism::parse("a->aabc,b->a,c->c");
  auto lang = image_language(tau, fixed_point_language(cas, 0, 12), 12);
  auto s = FactorIndex::build(s_word(1 << 16), 11);
  for (std::size_t n = 0; n <= 12; ++n) {
    CAPTURE(n);
    REQUIRE(std::vector<std::string>(s.factors(n).begin(), s.factors(n).end()) == lang[n]);
  }
  Word direct = tau.apply(fixed_point(cas, 'a', 5000));
  CHECK(direct.str().substr(2, 4000) == s_word(4000).str());
}
