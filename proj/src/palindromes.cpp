#include "palrich/palindromes.hpp"

#include <algorithm>
#include <functional>

#include "palrich/error.hpp"

namespace palrich {

namespace {

constexpr std::uint32_t kNone = UINT32_MAX;

// Manacher radii. odd[i]: palindromes centred at i have lengths 1, 3, ...,
// 2*odd[i]-1. even[i]: centred between i-1 and i, lengths 2, ..., 2*even[i].
struct Radii {
  std::vector<std::size_t> odd, even;

  explicit Radii(std::string_view s) : odd(s.size()), even(s.size()) {
    const long n = static_cast<long>(s.size());
    for (long i = 0, l = 0, r = -1; i < n; ++i) {
      long k = i > r ? 1 : std::min<long>(static_cast<long>(odd[l + r - i]), r - i + 1);
      while (i - k >= 0 && i + k < n && s[i - k] == s[i + k]) ++k;
      odd[i] = static_cast<std::size_t>(k);
      if (i + k - 1 > r) l = i - k + 1, r = i + k - 1;
    }
    for (long i = 0, l = 0, r = -1; i < n; ++i) {
      long k = i > r ? 0 : std::min<long>(static_cast<long>(even[l + r - i + 1]), r - i + 1);
      while (i - k - 1 >= 0 && i + k < n && s[i - k - 1] == s[i + k]) ++k;
      even[i] = static_cast<std::size_t>(k);
      if (i + k - 1 > r) l = i - k, r = i + k - 1;
    }
  }

  // s[l, r) is a palindrome.
  bool palindrome(std::size_t l, std::size_t r) const {
    std::size_t m = r - l;
    if (m <= 1) return true;
    std::size_t c = l + m / 2;
    return m % 2 == 1 ? odd[c] >= (m + 1) / 2 : even[c] >= m / 2;
  }
};

// Calls visit(length, starts) once per distinct non-empty palindromic factor,
// with its sorted start positions; lengths ascending, then factors
// lexicographically.
void for_each_palindrome(std::string_view s, const Radii& radii,
                         const std::function<void(std::size_t, const std::vector<std::uint32_t>&)>& visit) {
  std::vector<std::vector<std::uint32_t>> by_len(s.size() + 1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t k = 1; k <= radii.odd[i]; ++k) by_len[2 * k - 1].push_back(static_cast<std::uint32_t>(i - k + 1));
    for (std::size_t k = 1; k <= radii.even[i]; ++k) by_len[2 * k].push_back(static_cast<std::uint32_t>(i - k));
  }
  // A palindrome of length len at a is c u c with u the palindrome of
  // length len-2 at a+1, so sorting by (c, rank of u) orders factors
  // lexicographically.
  std::vector<std::uint32_t> rank[2] = {std::vector<std::uint32_t>(s.size() + 1, 0),
                                        std::vector<std::uint32_t>(s.size() + 1, 0)};
  std::vector<std::pair<std::uint64_t, std::uint32_t>> keyed;
  std::vector<std::uint32_t> group;
  for (std::size_t len = 1; len <= s.size(); ++len) {
    auto& r = rank[len % 2];
    keyed.clear();
    for (std::uint32_t a : by_len[len]) {
      std::uint64_t inner = len > 2 ? r[a + 1] : 0;
      keyed.emplace_back((static_cast<std::uint64_t>(static_cast<unsigned char>(s[a])) << 32) | inner, a);
    }
    std::sort(keyed.begin(), keyed.end());
    std::uint32_t next_rank = 0;
    for (std::size_t k = 0; k < keyed.size();) {
      std::size_t e = k + 1;
      while (e < keyed.size() && keyed[e].first == keyed[k].first) ++e;
      group.clear();
      for (std::size_t j = k; j < e; ++j) {
        group.push_back(keyed[j].second);
        r[keyed[j].second] = next_rank;
      }
      ++next_rank;
      visit(len, group);
      k = e;
    }
  }
}

Word as_index_word(const FactorIndex& idx, const Word& v) {
  return v.alphabet() == idx.alphabet() ? v : Word::parse(v.str(), idx.alphabet());
}

}  // namespace

// ------------------------------------------------------------------ Eertree

Eertree::Eertree(Alphabet alphabet) : alphabet_(std::move(alphabet)), sigma_(std::max<std::size_t>(alphabet_.size(), 1)) {
  len_ = {-1, 0};
  link_ = {0, 0};
  first_end_ = {0, 0};
  ends_here_ = {0, 0};
  next_.assign(2 * sigma_, kNone);
  suffix_node_ = {1};
}

std::uint32_t Eertree::find_extendable(std::uint32_t node, std::size_t pos, Letter c) const {
  while (true) {
    long before = static_cast<long>(pos) - len_[node] - 1;
    if (before >= 0 && static_cast<Letter>(text_[static_cast<std::size_t>(before)]) == c) return node;
    node = link_[node];
  }
}

bool Eertree::push_back(Letter c) {
  if (c >= alphabet_.size()) throw Error(Errc::kInvalidArgument, "letter outside eertree alphabet");
  const std::size_t pos = text_.size();
  text_.push_back(static_cast<char>(c));
  const std::uint32_t prev_last = suffix_node_.back();
  std::uint32_t parent = find_extendable(prev_last, pos, c);
  std::uint32_t& slot = next_[parent * sigma_ + c];
  bool created = slot == kNone;
  if (created) {
    auto node = static_cast<std::uint32_t>(len_.size());
    int length = len_[parent] + 2;
    std::uint32_t link = 1;
    if (length > 1) link = next_[find_extendable(link_[parent], pos, c) * sigma_ + c];
    slot = node;
    len_.push_back(length);
    link_.push_back(link);
    first_end_.push_back(static_cast<std::uint32_t>(pos + 1));
    ends_here_.push_back(0);
    next_.resize(next_.size() + sigma_, kNone);
  }
  std::uint32_t last = next_[parent * sigma_ + c];
  ++ends_here_[last];
  suffix_node_.push_back(last);
  undo_.push_back({prev_last, created ? parent : kNone});
  return created;
}

void Eertree::pop_back() {
  if (text_.empty()) throw Error(Errc::kOutOfRange, "pop_back on empty eertree");
  Undo u = undo_.back();
  undo_.pop_back();
  --ends_here_[suffix_node_.back()];
  suffix_node_.pop_back();
  if (u.parent != kNone) {
    next_[u.parent * sigma_ + static_cast<Letter>(text_.back())] = kNone;
    len_.pop_back();
    link_.pop_back();
    first_end_.pop_back();
    ends_here_.pop_back();
    next_.resize(next_.size() - sigma_);
  }
  text_.pop_back();
}

std::string Eertree::palindrome(std::size_t node) const {
  int l = len_.at(node);
  if (l <= 0) return {};
  return text_.substr(first_end_[node] - static_cast<std::size_t>(l), static_cast<std::size_t>(l));
}

std::optional<std::size_t> Eertree::child(std::size_t node, Letter c) const {
  if (node >= len_.size() || c >= alphabet_.size()) return std::nullopt;
  std::uint32_t v = next_[node * sigma_ + c];
  if (v == kNone) return std::nullopt;
  return v;
}

std::size_t Eertree::suffix_node(std::size_t i) const {
  if (i < 1 || i > text_.size()) throw Error(Errc::kOutOfRange, "prefix position outside 1..|w|");
  return suffix_node_[i];
}

std::vector<std::size_t> Eertree::occurrence_counts() const {
  std::vector<std::size_t> count(ends_here_.begin(), ends_here_.end());
  // Nodes are created in order of first appearance, and a link target
  // always appears no later, so a reverse sweep sees children first.
  for (std::size_t v = len_.size(); v-- > 2;) count[link_[v]] += count[v];
  count[0] = count[1] = 0;
  return count;
}

Eertree build_eertree(const Word& w) {
  Eertree t(w.alphabet());
  for (std::size_t i = 0; i < w.size(); ++i) t.push_back(w[i]);
  return t;
}

std::vector<std::size_t> palindromic_counts(const Eertree& t) {
  std::vector<std::size_t> p(t.size() + 1, 0);
  p[0] = 1;
  for (std::size_t v = 2; v < t.node_count(); ++v) ++p[static_cast<std::size_t>(t.length(v))];
  return p;
}

std::size_t palindromic_complexity(const Eertree& t, std::size_t n) {
  if (n > t.size()) throw Error(Errc::kOutOfRange, "P(n) needs n <= |w|");
  if (n == 0) return 1;
  std::size_t count = 0;
  for (std::size_t v = 2; v < t.node_count(); ++v) count += static_cast<std::size_t>(t.length(v)) == n;
  return count;
}

Word longest_palindromic_suffix(const Eertree& t, std::size_t i) {
  return Word(t.alphabet(), t.palindrome(t.suffix_node(i)));
}

// ---------------------------------------------------------------- richness

RichnessReport is_rich_incremental(const Word& w) {
  RichnessReport r;
  Eertree t(w.alphabet());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!t.push_back(w[i]) && !r.first_violation_prefix) r.first_violation_prefix = i + 1;
  }
  r.defect = w.size() + 1 - (t.distinct_palindromes() + 1);
  r.rich = !r.first_violation_prefix;
  return r;
}

RichnessReport is_rich_by_returns(const Word& w) {
  RichnessReport r;
  const std::string_view s = w.letters();
  Radii radii(s);
  std::size_t distinct = 1;
  std::optional<std::size_t> witness_start;
  std::string witness_pal;
  std::size_t witness_end = 0;
  for_each_palindrome(s, radii, [&](std::size_t len, const std::vector<std::uint32_t>& starts) {
    ++distinct;
    for (std::size_t k = 0; k + 1 < starts.size(); ++k) {
      std::size_t end = starts[k + 1] + len;
      if (radii.palindrome(starts[k], end)) continue;
      if (!r.first_violation_prefix || end < *r.first_violation_prefix) r.first_violation_prefix = end;
      std::string pal(s.substr(starts[k], len));
      if (!witness_start || pal < witness_pal) {
        witness_pal = pal;
        witness_start = starts[k];
        witness_end = end;
      }
      // Later returns of the same palindrome cannot beat the first one.
      break;
    }
  });
  r.defect = s.size() + 1 - distinct;
  r.rich = !r.first_violation_prefix;
  if (witness_start) {
    r.witness = std::make_pair(Word(w.alphabet(), witness_pal), w.substr(*witness_start, witness_end - *witness_start));
  }
  return r;
}

std::size_t count_distinct_palindromes(const Word& w) {
  Radii radii(w.letters());
  std::size_t distinct = 1;
  for_each_palindrome(w.letters(), radii, [&](std::size_t, const std::vector<std::uint32_t>&) { ++distinct; });
  return distinct;
}

bool is_rich_by_count(const Word& w) { return count_distinct_palindromes(w) == w.size() + 1; }

// --------------------------------------------------- occurrence properties

SpanCheck check_v2reverse(const FactorIndex& idx, const Word& v_in) {
  const Word v = as_index_word(idx, v_in);
  auto vid = idx.find(v.letters());
  if (!vid) throw Error(Errc::kFactorAbsent, "'" + v_in.str() + "' is not an indexed factor");
  const std::string_view s = idx.source().letters();
  const std::size_t m = v.size();
  SpanCheck result;
  auto fail = [&](std::size_t from, std::size_t to) {
    result.holds = false;
    result.counterexample = idx.source().substr(from, to - from);
  };

  auto occ_v = idx.occurrences(m, *vid);
  if (is_palindrome(v)) {
    for (std::size_t k = 0; k + 1 < occ_v.size(); ++k) {
      std::size_t end = occ_v[k + 1] + m;
      if (!is_palindrome(s.substr(occ_v[k], end - occ_v[k]))) {
        fail(occ_v[k], end);
        return result;
      }
    }
    return result;
  }

  std::string rv = reversed(v.letters());
  auto rid = idx.find(rv);
  if (!rid) return result;
  auto occ_r = idx.occurrences(m, *rid);
  std::vector<std::pair<std::uint32_t, bool>> merged;  // (start, is reverse)
  for (auto p : occ_v) merged.emplace_back(p, false);
  for (auto p : occ_r) merged.emplace_back(p, true);
  std::sort(merged.begin(), merged.end());
  for (std::size_t k = 0; k + 1 < merged.size(); ++k) {
    if (merged[k].second == merged[k + 1].second) continue;
    std::size_t end = merged[k + 1].first + m;
    if (!is_palindrome(s.substr(merged[k].first, end - merged[k].first))) {
      fail(merged[k].first, end);
      return result;
    }
  }
  return result;
}

bool check_alternation(const FactorIndex& idx, const Word& v_in) {
  const Word v = as_index_word(idx, v_in);
  if (is_palindrome(v)) throw Error(Errc::kPalindromicInput, "alternation applies to non-palindromic factors");
  auto vid = idx.find(v.letters());
  if (!vid) throw Error(Errc::kFactorAbsent, "'" + v_in.str() + "' is not an indexed factor");
  std::vector<std::pair<std::uint32_t, bool>> merged;
  for (auto p : idx.occurrences(v.size(), *vid)) merged.emplace_back(p, false);
  if (auto rid = idx.find(reversed(v.letters()))) {
    for (auto p : idx.occurrences(v.size(), *rid)) merged.emplace_back(p, true);
  }
  std::sort(merged.begin(), merged.end());
  for (std::size_t k = 0; k + 1 < merged.size(); ++k) {
    if (merged[k].second == merged[k + 1].second) return false;
  }
  return true;
}

}  // namespace palrich
