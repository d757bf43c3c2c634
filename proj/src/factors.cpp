#include "palrich/factors.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "palrich/error.hpp"

namespace palrich {

namespace {

// Assigns class ids to the windows of length n+1 from the ids of length n
// and the following letter. Window i of length n+1 equals window j iff
// their length-n windows and next letters agree, so ids are exact.
class RankRefiner {
 public:
  RankRefiner(std::string_view s, std::size_t sigma) : s_(s), sigma_(std::max<std::size_t>(sigma, 1)) {
    rank_.assign(s.size() + 1, 0);
  }

  std::size_t length() const noexcept { return n_; }
  std::size_t classes() const noexcept { return classes_; }
  const std::vector<std::uint32_t>& ranks() const noexcept { return rank_; }

  void step() {
    const std::size_t windows = s_.size() - n_;  // windows of length n+1
    std::vector<std::uint32_t> next(windows);
    std::uint32_t fresh = 0;
    const std::size_t keys = classes_ * sigma_;
    if (keys <= (std::size_t{1} << 22)) {
      std::vector<std::uint32_t> table(keys, UINT32_MAX);
      for (std::size_t i = 0; i < windows; ++i) {
        std::size_t key = rank_[i] * sigma_ + static_cast<unsigned char>(s_[i + n_]);
        if (table[key] == UINT32_MAX) table[key] = fresh++;
        next[i] = table[key];
      }
    } else {
      std::unordered_map<std::uint64_t, std::uint32_t> table;
      table.reserve(windows);
      for (std::size_t i = 0; i < windows; ++i) {
        std::uint64_t key = std::uint64_t{rank_[i]} * sigma_ + static_cast<unsigned char>(s_[i + n_]);
        auto [it, inserted] = table.try_emplace(key, fresh);
        if (inserted) ++fresh;
        next[i] = it->second;
      }
    }
    rank_ = std::move(next);
    classes_ = fresh;
    ++n_;
  }

 private:
  std::string_view s_;
  std::size_t sigma_;
  std::size_t n_ = 0;
  std::size_t classes_ = 1;
  std::vector<std::uint32_t> rank_;
};

std::size_t lookup(const std::vector<std::string>& sorted, std::string_view key) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), key,
                             [](const std::string& a, std::string_view b) { return std::string_view(a) < b; });
  if (it == sorted.end() || *it != key) return SIZE_MAX;
  return static_cast<std::size_t>(it - sorted.begin());
}

void add_minimal_covers(const std::string& image, std::size_t first_len, std::size_t last_len,
                        std::size_t max_len, const std::function<void(std::string)>& emit) {
  const std::size_t total = image.size();
  for (std::size_t start = 0; start < first_len; ++start) {
    std::size_t lo = std::max(total - last_len + 1, start + 1);
    std::size_t hi = std::min(total, start + max_len);
    for (std::size_t end = lo; end <= hi; ++end) emit(image.substr(start, end - start));
  }
}

std::vector<std::vector<std::string>> group_by_length(const std::unordered_set<std::string>& all,
                                                      std::size_t max_len) {
  std::vector<std::vector<std::string>> levels(max_len + 1);
  levels[0].emplace_back();
  for (const auto& f : all) {
    if (!f.empty() && f.size() <= max_len) levels[f.size()].push_back(f);
  }
  for (auto& l : levels) std::sort(l.begin(), l.end());
  return levels;
}

}  // namespace

// ------------------------------------------------------------- FactorIndex

FactorIndex FactorIndex::build(const Word& w, std::size_t n_max) {
  if (n_max + 1 > w.size()) {
    throw Error(Errc::kWordTooShort, "need n_max + 1 <= |w| (n_max=" + std::to_string(n_max) +
                                         ", |w|=" + std::to_string(w.size()) + ")");
  }
  FactorIndex idx;
  idx.alphabet_ = w.alphabet();
  idx.source_ = w;
  idx.levels_.resize(n_max + 2);
  const std::string_view s = w.letters();

  RankRefiner refiner(s, w.alphabet().size());
  for (std::size_t n = 0; n <= n_max + 1; ++n) {
    if (n > 0) refiner.step();
    const auto& rank = refiner.ranks();
    const std::size_t classes = refiner.classes();
    const std::size_t windows = s.size() - n + 1;

    std::vector<std::uint32_t> first(classes, UINT32_MAX);
    std::vector<std::uint32_t> count(classes, 0);
    for (std::size_t i = 0; i < windows; ++i) {
      if (first[rank[i]] == UINT32_MAX) first[rank[i]] = static_cast<std::uint32_t>(i);
      ++count[rank[i]];
    }
    std::vector<std::uint32_t> order(classes);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      return s.substr(first[a], n) < s.substr(first[b], n);
    });
    std::vector<std::uint32_t> final_id(classes);
    for (std::size_t k = 0; k < classes; ++k) final_id[order[k]] = static_cast<std::uint32_t>(k);

    Level& level = idx.levels_[n];
    level.factors.resize(classes);
    level.occ_offsets.assign(classes + 1, 0);
    for (std::size_t k = 0; k < classes; ++k) {
      level.factors[k] = std::string(s.substr(first[order[k]], n));
      level.occ_offsets[k + 1] = level.occ_offsets[k] + count[order[k]];
    }
    level.occ.resize(windows);
    std::vector<std::uint32_t> cursor(level.occ_offsets.begin(), level.occ_offsets.end() - 1);
    for (std::size_t i = 0; i < windows; ++i) {
      level.occ[cursor[final_id[rank[i]]]++] = static_cast<std::uint32_t>(i);
    }
  }
  idx.compute_extensions();
  return idx;
}

FactorIndex FactorIndex::from_language(Alphabet alphabet, std::vector<std::vector<std::string>> levels) {
  if (levels.size() < 2) throw Error(Errc::kInvalidArgument, "language needs levels 0..n_max+1 with n_max >= 0");
  FactorIndex idx;
  idx.alphabet_ = std::move(alphabet);
  idx.levels_.resize(levels.size());
  for (std::size_t n = 0; n < levels.size(); ++n) {
    auto& f = levels[n];
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    for (const auto& x : f) {
      if (x.size() != n) throw Error(Errc::kInvalidArgument, "language level holds a factor of the wrong length");
      for (char c : x) {
        if (static_cast<unsigned char>(c) >= idx.alphabet_.size()) {
          throw Error(Errc::kInvalidArgument, "language letter outside alphabet");
        }
      }
    }
    idx.levels_[n].factors = std::move(f);
  }
  if (idx.levels_[0].factors.size() != 1) throw Error(Errc::kInvalidArgument, "level 0 must hold the empty word");
  idx.compute_extensions();
  return idx;
}

void FactorIndex::compute_extensions() {
  for (std::size_t n = 0; n + 1 < levels_.size(); ++n) {
    Level& cur = levels_[n];
    cur.right.assign(cur.factors.size(), 0);
    cur.left.assign(cur.factors.size(), 0);
    for (const auto& x : levels_[n + 1].factors) {
      std::size_t pre = lookup(cur.factors, std::string_view(x).substr(0, n));
      std::size_t suf = lookup(cur.factors, std::string_view(x).substr(1));
      if (pre == SIZE_MAX || suf == SIZE_MAX) {
        throw Error(Errc::kInvalidArgument, "factor set is not closed under taking factors");
      }
      cur.right[pre] |= LetterSet{1} << static_cast<unsigned char>(x.back());
      cur.left[suf] |= LetterSet{1} << static_cast<unsigned char>(x.front());
    }
  }
}

const FactorIndex::Level& FactorIndex::level(std::size_t n) const {
  if (n >= levels_.size()) {
    throw Error(Errc::kOutOfRange, "length " + std::to_string(n) + " beyond indexed n_max+1 = " +
                                       std::to_string(levels_.size() - 1));
  }
  return levels_[n];
}

const Word& FactorIndex::source() const {
  if (!source_) throw Error(Errc::kNoOccurrenceData, "index was built from a factor language");
  return *source_;
}

std::span<const std::string> FactorIndex::factors(std::size_t n) const { return level(n).factors; }

std::optional<std::size_t> FactorIndex::find(std::string_view factor) const {
  if (factor.size() >= levels_.size()) return std::nullopt;
  std::size_t id = lookup(levels_[factor.size()].factors, factor);
  if (id == SIZE_MAX) return std::nullopt;
  return id;
}

std::span<const std::uint32_t> FactorIndex::occurrences(std::size_t n, std::size_t id) const {
  if (!source_) throw Error(Errc::kNoOccurrenceData, "index was built from a factor language");
  const Level& l = level(n);
  if (id >= l.factors.size()) throw Error(Errc::kOutOfRange, "factor id out of range");
  return std::span<const std::uint32_t>(l.occ).subspan(l.occ_offsets[id], l.occ_offsets[id + 1] - l.occ_offsets[id]);
}

LetterSet FactorIndex::right_extensions(std::size_t n, std::size_t id) const {
  if (n + 1 >= levels_.size()) throw Error(Errc::kOutOfRange, "extensions need n <= n_max");
  return level(n).right.at(id);
}

LetterSet FactorIndex::left_extensions(std::size_t n, std::size_t id) const {
  if (n + 1 >= levels_.size()) throw Error(Errc::kOutOfRange, "extensions need n <= n_max");
  return level(n).left.at(id);
}

// ----------------------------------------------------------------- queries

std::vector<std::size_t> factor_counts(const Word& w, std::size_t n_max) {
  if (n_max + 1 > w.size()) throw Error(Errc::kWordTooShort, "need n_max + 1 <= |w|");
  std::vector<std::size_t> counts{1};
  RankRefiner refiner(w.letters(), w.alphabet().size());
  for (std::size_t n = 1; n <= n_max + 1; ++n) {
    refiner.step();
    counts.push_back(refiner.classes());
  }
  return counts;
}

std::size_t factor_complexity(const FactorIndex& idx, std::size_t n) { return idx.factors(n).size(); }

SpecialFactorReport special_factors(const FactorIndex& idx, std::size_t n) {
  if (n > idx.n_max()) throw Error(Errc::kOutOfRange, "special factors need n <= n_max");
  SpecialFactorReport report;
  report.n = n;
  auto f = idx.factors(n);
  for (std::size_t id = 0; id < f.size(); ++id) {
    bool right = idx.out_degree(n, id) >= 2;
    bool left = idx.in_degree(n, id) >= 2;
    if (right) report.right_special.push_back(f[id]);
    if (left) report.left_special.push_back(f[id]);
    if (right && left) report.bispecial.push_back(f[id]);
    if (right || left) {
      ++report.special_count;
      if (is_palindrome(f[id])) ++report.special_palindromes;
    }
  }
  return report;
}

std::pair<long long, long long> complexity_difference_identity(const FactorIndex& idx, std::size_t n) {
  if (n > idx.n_max()) throw Error(Errc::kOutOfRange, "identity needs n <= n_max");
  long long lhs = static_cast<long long>(idx.factors(n + 1).size()) - static_cast<long long>(idx.factors(n).size());
  long long rhs = 0;
  for (std::size_t id = 0; id < idx.factors(n).size(); ++id) {
    std::size_t out = idx.out_degree(n, id);
    if (out >= 2 || idx.in_degree(n, id) >= 2) rhs += static_cast<long long>(out) - 1;
  }
  return {lhs, rhs};
}

CompleteReturns complete_returns(const FactorIndex& idx, const Word& u) {
  const Word& src = idx.source();
  Word key = u.alphabet() == idx.alphabet() ? u : Word::parse(u.str(), idx.alphabet());
  auto id = idx.find(key.letters());
  if (!id) throw Error(Errc::kFactorAbsent, "'" + u.str() + "' is not an indexed factor");
  auto occ = idx.occurrences(u.size(), *id);
  if (occ.size() < 2) throw Error(Errc::kSingleOccurrence, "'" + u.str() + "' occurs once");
  CompleteReturns out;
  for (std::size_t k = 0; k + 1 < occ.size(); ++k) {
    out.in_order.push_back(src.substr(occ[k], occ[k + 1] + u.size() - occ[k]));
  }
  out.distinct = out.in_order;
  std::sort(out.distinct.begin(), out.distinct.end());
  out.distinct.erase(std::unique(out.distinct.begin(), out.distinct.end()), out.distinct.end());
  return out;
}

ClosureCheck is_closed_under_reversal(const FactorIndex& idx, std::size_t n) {
  if (n > idx.n_max() + 1) throw Error(Errc::kOutOfRange, "closure depth beyond indexed lengths");
  ClosureCheck result;
  // Report from the deepest failing length; within it, the factor that
  // occurs first in the source (lexicographically least without positions).
  for (std::size_t len = n; len >= 1; --len) {
    auto f = idx.factors(len);
    std::optional<std::size_t> best;
    std::uint32_t best_pos = UINT32_MAX;
    for (std::size_t id = 0; id < f.size(); ++id) {
      if (idx.contains(reversed(f[id]))) continue;
      if (!idx.has_occurrences()) {
        best = id;
        break;
      }
      std::uint32_t pos = idx.occurrences(len, id).front();
      if (pos < best_pos) {
        best_pos = pos;
        best = id;
      }
    }
    if (best) {
      result.closed = false;
      result.witness = Word(idx.alphabet(), f[*best]);
      return result;
    }
  }
  return result;
}

bool recurrence_probe(const FactorIndex& idx, std::size_t n, std::size_t min_occurrences) {
  if (n > idx.n_max()) throw Error(Errc::kOutOfRange, "probe depth needs n <= n_max");
  for (std::size_t len = 1; len <= n; ++len) {
    for (std::size_t id = 0; id < idx.factors(len).size(); ++id) {
      if (idx.occurrences(len, id).size() < min_occurrences) return false;
    }
  }
  return true;
}

StabilizedPrefix stabilized_prefix(const PrefixGenerator& generator, std::size_t n_max, std::size_t len_cap) {
  const std::size_t start = 4 * (n_max + 1);
  if (len_cap < start) throw Error(Errc::kInvalidArgument, "prefix cap must be >= 4(n_max+1)");
  std::size_t len = start;
  Word w = generator(len);
  auto counts = factor_counts(w, n_max);
  while (true) {
    std::size_t next_len = std::min(2 * len, len_cap);
    if (next_len == len) return {std::move(w), false};
    Word next = generator(next_len);
    auto next_counts = factor_counts(next, n_max);
    // Factor sets of a prefix are subsets of those of its extensions, so
    // equal counts mean equal sets.
    // A step shortened by the cap is not a doubling and proves nothing.
    bool same = next_counts == counts && next_len == 2 * len;
    w = std::move(next);
    counts = std::move(next_counts);
    len = next_len;
    if (same) return {std::move(w), true};
  }
}

// ----------------------------------------------------------- languages

std::vector<std::vector<std::string>> fixed_point_language(const Morphism& m, Letter seed, std::size_t max_len) {
  if (seed >= m.alphabet().size() || !m.prolongable(seed)) {
    throw Error(Errc::kNotProlongable, "m(seed) must start with seed and have length >= 2");
  }
  // Each factor of x = m(x) is a minimally covered factor of m(u) for some
  // factor u of x no longer than itself; close {seed} under that rule.
  std::unordered_set<std::string> seen;
  std::vector<std::string> work;
  auto emit = [&](std::string z) {
    if (seen.insert(z).second) work.push_back(std::move(z));
  };
  emit(std::string(1, static_cast<char>(seed)));
  while (!work.empty()) {
    std::string u = std::move(work.back());
    work.pop_back();
    std::string img = m.apply(u);
    add_minimal_covers(img, m.image(static_cast<Letter>(u.front())).size(),
                       m.image(static_cast<Letter>(u.back())).size(), max_len, emit);
  }
  return group_by_length(seen, max_len);
}

std::vector<std::vector<std::string>> image_language(const Morphism& tau,
                                                     const std::vector<std::vector<std::string>>& base,
                                                     std::size_t max_len) {
  if (base.size() < max_len + 1) throw Error(Errc::kInvalidArgument, "base language too short for image");
  std::unordered_set<std::string> seen;
  auto emit = [&](std::string z) { seen.insert(std::move(z)); };
  for (std::size_t n = 1; n <= max_len; ++n) {
    for (const auto& u : base[n]) {
      std::string img = tau.apply(u);
      add_minimal_covers(img, tau.image(static_cast<Letter>(u.front())).size(),
                         tau.image(static_cast<Letter>(u.back())).size(), max_len, emit);
    }
  }
  return group_by_length(seen, max_len);
}

}  // namespace palrich
