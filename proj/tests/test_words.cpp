#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "palrich/error.hpp"
#include "palrich/palindromes.hpp"
#include "palrich/words.hpp"

using namespace palrich;

namespace {

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

TEST_CASE("reverse and palindromes") {
  CHECK(reverse(Word::parse("abaab")).str() == "baaba");
  CHECK(reverse(Word::parse("")).str().empty());
  CHECK(reverse(Word::parse("aba")).str() == "aba");
  CHECK(is_palindrome(Word::parse("aabaa")));
  CHECK_FALSE(is_palindrome(Word::parse("abca")));
  CHECK(is_palindrome(Word::parse("")));
  CHECK(is_palindrome(Word::parse("c")));
}

TEST_CASE("alphabet and parsing") {
  Word w = Word::parse("cab");
  CHECK(w.alphabet().symbols() == "abc");
  CHECK(w[0] == 2);
  CHECK(code_of([] { Word::parse("aXb"); }) == Errc::kInvalidArgument);
  CHECK(code_of([] { Word::parse("abd", Alphabet("abc")); }) == Errc::kParseError);
  CHECK(code_of([] { Alphabet("aa"); }) == Errc::kInvalidArgument);
  Word joined = Word::parse("ab") + Word::parse("cc");
  CHECK(joined.str() == "abcc");
  CHECK(joined.alphabet().symbols() == "abc");
}

TEST_CASE("morphisms") {
  Morphism cas = Morphism::parse("a->aab,b->b");
  CHECK(morphic_image(cas, Word::parse("ab", cas.alphabet())).str() == "aabb");
  Morphism fib = Morphism::parse("a->ab,b->a");
  CHECK(morphic_image(fib, Word::parse("aba")).str() == "abaab");
  Word any = Word::parse("abcab");
  CHECK(morphic_image(Morphism::identity(any.alphabet()), any) == any);
  CHECK(Morphism::parse("a->ab,b->a").str() == "a->ab,b->a");
  CHECK(code_of([] { Morphism::parse("a->ab"); }) == Errc::kParseError);
  CHECK(code_of([] { Morphism(Alphabet("ab"), {"ab", ""}); }) == Errc::kInvalidArgument);
}

TEST_CASE("fixed points") {
  CHECK(fixed_point(Morphism::parse("a->ab,b->a"), 'a', 13).str() == "abaababaabaab");
  CHECK(fixed_point(Morphism::parse("a->aab,b->b"), 'a', 15).str() == "aabaabbaabaabbb");

  // a->abab, b->b: the fixed point is the product of aba b^(nu2(i)+2).
  std::string expected;
  for (std::size_t i = 1; expected.size() < 400; ++i) expected += "aba" + std::string(oracle::nu2(i) + 2, 'b');
  Word q = fixed_point(Morphism::parse("a->abab,b->b"), 'a', 400);
  CHECK(q.str() == expected.substr(0, 400));
  CHECK(q.prefix(12).str() == "ababbababbba");

  CHECK(code_of([] { fixed_point(Morphism::parse("a->ba,b->a"), 'a', 5); }) == Errc::kNotProlongable);
  CHECK(code_of([] { fixed_point(Morphism::parse("a->a,b->b"), 'a', 5); }) == Errc::kNotProlongable);
  CHECK(fixed_point(Morphism::parse("a->ab,b->a"), 'a', 0).empty());
}

TEST_CASE("fixed points are prefix-stable and match direct iteration") {
  const std::vector<std::pair<std::string, std::map<char, std::string>>> cases = {
      {"a->ab,b->a", {{'a', "ab"}, {'b', "a"}}},
      {"a->aab,b->b", {{'a', "aab"}, {'b', "b"}}},
      {"a->ab,b->ba", {{'a', "ab"}, {'b', "ba"}}},
      {"a->ab,b->ac,c->a", {{'a', "ab"}, {'b', "ac"}, {'c', "a"}}},
  };
  for (const auto& [spec, map] : cases) {
    Morphism m = Morphism::parse(spec);
    for (std::size_t len : {1u, 7u, 50u, 300u}) {
      Word w = fixed_point(m, 'a', len);
      CHECK(w.str() == oracle::iterate(map, 'a', len));
      CHECK(fixed_point(m, 'a', 2 * len).prefix(len) == w);
    }
  }
}

TEST_CASE("morphic image distributes over concatenation") {
  Morphism m = Morphism::parse("a->aabaabab,b->bab");
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    std::string u, v;
    for (int i = 0; i < 6; ++i) u.push_back("ab"[rng() % 2]), v.push_back("ab"[rng() % 2]);
    Word wu = Word::parse(u, m.alphabet()), wv = Word::parse(v, m.alphabet());
    CHECK(m.apply(wu + wv) == m.apply(wu) + m.apply(wv));
  }
}

TEST_CASE("periodic words") {
  CHECK(periodic_word(Word::parse("aabaabab"), 10).str() == "aabaababaa");
  CHECK(periodic_word(Word::parse("a"), 4).str() == "aaaa");
  CHECK(periodic_word(Word::parse("ab"), 5).str() == "ababa");
  CHECK(code_of([] { periodic_word(Word::parse(""), 3); }) == Errc::kEmptyBlock);
}

TEST_CASE("s word") {
  CHECK(s_word(10).str() == "bcaabcaaab");
  CHECK(s_word(2).str() == "bc");
  CHECK(s_word(0).str().empty());
  CHECK(s_word(1).str() == "b");
  // s_n = s_{n-1} a^n s_{n-1}
  std::string s = "bc";
  for (std::size_t n = 2; n <= 9; ++n) s = s + std::string(n, 'a') + s;
  CHECK(s_word(s.size()).str() == s);
  CHECK(s_word(s.size()).alphabet().symbols() == "abc");
}

TEST_CASE("palindromic closure") {
  CHECK(palindromic_closure(Word::parse("ab")).str() == "aba");
  CHECK(palindromic_closure(Word::parse("aab")).str() == "aabaa");
  CHECK(palindromic_closure(Word::parse("aba")).str() == "aba");
  CHECK(palindromic_closure(Word::parse("")).str().empty());
  for (std::size_t n = 1; n <= 9; ++n) {
    for (const auto& s : oracle::all_words("ab", n)) {
      Word w = Word::parse(s, Alphabet("ab"));
      REQUIRE(palindromic_closure(w).str() == oracle::shortest_palindromic_extension(s));
    }
  }
}

TEST_CASE("episturmian words") {
  CHECK(episturmian_word(DirectiveSequence::parse("abab"), 6).str() == "abaaba");
  CHECK(episturmian_word(DirectiveSequence::parse("a"), 1).str() == "a");
  CHECK(episturmian_word(DirectiveSequence::parse("abc"), 7).str() == "abacaba");
  CHECK(code_of([] { episturmian_word(DirectiveSequence::parse("ab"), 10); }) == Errc::kDirectiveExhausted);
  // Directive (ab)* gives the Fibonacci word.
  Word f = fixed_point(Morphism::parse("a->ab,b->a"), 'a', 500);
  CHECK(episturmian_word(DirectiveSequence::cyclic("ab", 40), 500) == f);
}

TEST_CASE("binary episturmian prefixes are rich") {
  std::mt19937 rng(11);
  for (int t = 0; t < 40; ++t) {
    std::string d;
    for (int i = 0; i < 200; ++i) d.push_back("ab"[rng() % 2]);
    Word w = episturmian_word(DirectiveSequence(Alphabet("ab"), std::string(Word::parse(d, Alphabet("ab")).letters())), 200);
    REQUIRE(is_rich_incremental(w).rich);
  }
}
