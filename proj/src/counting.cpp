#include "palrich/counting.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <thread>

#include "palrich/error.hpp"
#include "palrich/palindromes.hpp"

namespace palrich {

namespace {

Count add(Count a, Count b) {
  Count r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::kOverflow, "count exceeds 64 bits");
  return r;
}

Count mul(Count a, Count b) {
  Count r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::kOverflow, "count exceeds 64 bits");
  return r;
}

// Can `w + c` stay balanced, given w balanced? Only windows ending at the
// new letter are new.
bool balanced_after_push(const std::string& w) {
  const std::size_t m = w.size();
  std::vector<int> pref(m + 1, 0);
  for (std::size_t i = 0; i < m; ++i) pref[i + 1] = pref[i] + (w[i] == 'a');
  for (std::size_t len = 1; len < m; ++len) {
    int last = pref[m] - pref[m - len];
    for (std::size_t i = 0; i + len < m; ++i) {
      int d = pref[i + len] - pref[i] - last;
      if (d > 1 || d < -1) return false;
    }
  }
  return true;
}

void balanced_dfs(std::string& w, std::size_t n, std::vector<std::string>& out) {
  if (w.size() == n) {
    out.push_back(w);
    return;
  }
  for (char c : {'a', 'b'}) {
    w.push_back(c);
    if (balanced_after_push(w)) balanced_dfs(w, n, out);
    w.pop_back();
  }
}

Count rich_dfs(Eertree& t, std::size_t n, std::size_t k) {
  if (t.size() == n) return 1;
  Count total = 0;
  for (std::size_t c = 0; c < k; ++c) {
    bool grew = t.push_back(static_cast<Letter>(c));
    if (grew) total += rich_dfs(t, n, k);
    t.pop_back();
  }
  return total;
}

}  // namespace

Count totient(Count i) {
  if (i == 0) throw Error(Errc::kOutOfRange, "totient(0) is undefined");
  Count result = i;
  for (Count p = 2; p * p <= i; ++p) {
    if (i % p != 0) continue;
    while (i % p == 0) i /= p;
    result -= result / p;
  }
  if (i > 1) result -= result / i;
  return result;
}

Count sturmian_count(std::size_t n) {
  Count c = 1;
  for (std::size_t i = 1; i <= n; ++i) c = add(c, mul(n + 1 - i, totient(i)));
  return c;
}

Count sturmian_palindrome_count_split(std::size_t n) {
  Count p = 1;
  if (n % 2 == 0) {
    for (std::size_t i = 1; i <= n / 2; ++i) p = add(p, totient(2 * i));
  } else {
    for (std::size_t i = 0; i <= n / 2; ++i) p = add(p, totient(2 * i + 1));
  }
  return p;
}

Count sturmian_palindrome_count(std::size_t n) {
  Count p = 1;
  const std::size_t half = (n + 1) / 2;  // ceil(n/2)
  for (std::size_t i = 0; i < half; ++i) p = add(p, totient(n - 2 * i));
  if (p != sturmian_palindrome_count_split(n)) {
    throw Error(Errc::kInconsistent, "unified and split forms of p(" + std::to_string(n) + ") differ");
  }
  return p;
}

std::vector<std::string> enumerate_balanced(std::size_t n) {
  if (n > kMaxBalancedLength) {
    throw Error(Errc::kTooLarge, "balanced enumeration supports n <= " + std::to_string(kMaxBalancedLength));
  }
  std::vector<std::string> out;
  std::string w;
  balanced_dfs(w, n, out);
  return out;
}

Count sturmian_palindrome_enumeration_oracle(std::size_t n) {
  auto words = enumerate_balanced(n);
  return static_cast<Count>(std::count_if(words.begin(), words.end(), [](const std::string& w) {
    return is_palindrome(std::string_view(w));
  }));
}

bool verify_c_identity(std::size_t n_max) {
  for (std::size_t n = 0; n <= n_max; ++n) {
    Count lhs = add(sturmian_palindrome_count(2 * n), sturmian_palindrome_count(2 * n + 1));
    Count rhs = sturmian_count(2 * n + 1) - sturmian_count(2 * n) + 2;
    if (lhs != rhs) return false;
  }
  return true;
}

std::size_t max_rich_length(std::size_t alphabet_size) {
  switch (alphabet_size) {
    case 2: return 24;
    case 3: return 16;
    case 4: return 13;
    default: throw Error(Errc::kUnsupportedAlphabet, "rich counting supports 2 to 4 letters");
  }
}

Count count_rich(std::size_t k, std::size_t n, std::size_t threads) {
  if (n > max_rich_length(k)) {
    throw Error(Errc::kTooLarge, "count_rich over " + std::to_string(k) + " letters supports n <= " +
                                     std::to_string(max_rich_length(k)));
  }
  if (n == 0) return 1;
  const Alphabet alphabet(std::string("abcd").substr(0, k));

  // Rich prefixes of a fixed depth starting with the first letter.
  const std::size_t depth = std::min<std::size_t>(n, 8);
  std::vector<std::string> seeds;
  {
    Eertree t(alphabet);
    t.push_back(0);
    std::string w(1, '\0');
    auto grow = [&](auto&& self) -> void {
      if (w.size() == depth) {
        seeds.push_back(w);
        return;
      }
      for (std::size_t c = 0; c < k; ++c) {
        if (t.push_back(static_cast<Letter>(c))) {
          w.push_back(static_cast<char>(c));
          self(self);
          w.pop_back();
        }
        t.pop_back();
      }
    };
    grow(grow);
  }

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, seeds.size());
  std::vector<std::future<Count>> parts;
  for (std::size_t part = 0; part < threads; ++part) {
    parts.push_back(std::async(std::launch::async, [&, part] {
      Count sum = 0;
      for (std::size_t s = part; s < seeds.size(); s += threads) {
        Eertree t(alphabet);
        for (char c : seeds[s]) t.push_back(static_cast<Letter>(c));
        sum += rich_dfs(t, n, k);
      }
      return sum;
    }));
  }
  Count first = 0;
  for (auto& f : parts) first = add(first, f.get());
  // Permuting letters preserves richness.
  return mul(first, k);
}

Count count_rich_naive(std::size_t k, std::size_t n) {
  if (k < 2 || k > 4) throw Error(Errc::kUnsupportedAlphabet, "rich counting supports 2 to 4 letters");
  Count total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= k;
    if (total > (Count{1} << 24)) throw Error(Errc::kTooLarge, "naive sweep limited to 2^24 words");
  }
  const Alphabet alphabet(std::string("abcd").substr(0, k));
  std::string letters(n, '\0');
  Count rich = 0;
  for (Count idx = 0; idx < total; ++idx) {
    Count v = idx;
    for (std::size_t i = 0; i < n; ++i) {
      letters[n - 1 - i] = static_cast<char>(v % k);
      v /= k;
    }
    rich += is_rich_by_count(Word(alphabet, letters));
  }
  return rich;
}

std::string count_kind_name(CountKind kind) {
  switch (kind) {
    case CountKind::kSturmian: return "sturmian";
    case CountKind::kSturmianPalindrome: return "sturmian-palindrome";
    case CountKind::kRich: return "rich";
    case CountKind::kBalancedOracle: return "balanced-oracle";
  }
  return "?";
}

std::string CountTable::to_csv() const {
  std::ostringstream os;
  os << "n,count,provenance\n";
  for (const auto& [n, v] : values) os << n << ',' << v << ',' << provenance << '\n';
  return os.str();
}

CountTable count_table(CountKind kind, std::size_t n_max, std::size_t alphabet_size) {
  CountTable t;
  t.kind = kind;
  t.alphabet_size = alphabet_size;
  t.provenance = kind == CountKind::kSturmian || kind == CountKind::kSturmianPalindrome ? "formula" : "enumeration";
  if (kind != CountKind::kRich && alphabet_size != 2) {
    throw Error(Errc::kUnsupportedAlphabet, "Sturmian counts are binary");
  }
  for (std::size_t n = 0; n <= n_max; ++n) {
    switch (kind) {
      case CountKind::kSturmian: t.values[n] = sturmian_count(n); break;
      case CountKind::kSturmianPalindrome: t.values[n] = sturmian_palindrome_count(n); break;
      case CountKind::kRich: t.values[n] = count_rich(alphabet_size, n); break;
      case CountKind::kBalancedOracle: t.values[n] = enumerate_balanced(n).size(); break;
    }
  }
  return t;
}

}  // namespace palrich
