#include "palrich/words.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "palrich/error.hpp"

namespace palrich {

namespace {

std::string remap(std::string_view letters, const Alphabet& from, const Alphabet& to) {
  std::string out(letters.size(), '\0');
  for (std::size_t i = 0; i < letters.size(); ++i) {
    out[i] = static_cast<char>(*to.index(from.symbol(static_cast<Letter>(letters[i]))));
  }
  return out;
}

// Length of the longest palindromic suffix, via the prefix function of
// reverse(s) # s.
std::size_t longest_palindromic_suffix_length(std::string_view s) {
  if (s.empty()) return 0;
  std::string t = reversed(s);
  t.push_back(static_cast<char>(0x7f));
  t.append(s);
  std::vector<std::size_t> pi(t.size(), 0);
  for (std::size_t i = 1; i < t.size(); ++i) {
    std::size_t k = pi[i - 1];
    while (k > 0 && t[i] != t[k]) k = pi[k - 1];
    if (t[i] == t[k]) ++k;
    pi[i] = k;
  }
  return pi.back();
}

std::string closure_of(std::string_view s) {
  std::size_t lps = longest_palindromic_suffix_length(s);
  std::string out(s);
  out.append(reversed(s.substr(0, s.size() - lps)));
  return out;
}

}  // namespace

// ---------------------------------------------------------------- Alphabet

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
  if (symbols_.size() > kMaxAlphabet) {
    throw Error(Errc::kInvalidArgument, "alphabet larger than 26 letters");
  }
  std::array<bool, 256> seen{};
  for (char c : symbols_) {
    if (c < 'a' || c > 'z') {
      throw Error(Errc::kInvalidArgument, std::string("letter outside a-z: '") + c + "'");
    }
    auto& s = seen[static_cast<unsigned char>(c)];
    if (s) throw Error(Errc::kInvalidArgument, std::string("duplicate letter '") + c + "'");
    s = true;
  }
}

Alphabet Alphabet::infer(std::string_view text) {
  std::string s(text);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return Alphabet(s);
}

char Alphabet::symbol(Letter letter) const {
  if (letter >= symbols_.size()) throw Error(Errc::kOutOfRange, "letter index outside alphabet");
  return symbols_[letter];
}

std::optional<Letter> Alphabet::index(char symbol) const noexcept {
  auto pos = symbols_.find(symbol);
  if (pos == std::string::npos) return std::nullopt;
  return static_cast<Letter>(pos);
}

Alphabet Alphabet::merged(const Alphabet& other) const {
  return infer(symbols_ + other.symbols_);
}

// -------------------------------------------------------------------- Word

Word::Word(Alphabet alphabet, std::string letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  for (char c : letters_) {
    if (static_cast<unsigned char>(c) >= alphabet_.size()) {
      throw Error(Errc::kInvalidArgument, "letter index outside alphabet");
    }
  }
}

Word Word::parse(std::string_view text) { return parse(text, Alphabet::infer(text)); }

Word Word::parse(std::string_view text, const Alphabet& alphabet) {
  std::string letters(text.size(), '\0');
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto idx = alphabet.index(text[i]);
    if (!idx) {
      throw Error(Errc::kParseError, std::string("letter '") + text[i] + "' not in alphabet");
    }
    letters[i] = static_cast<char>(*idx);
  }
  Word w;
  w.alphabet_ = alphabet;
  w.letters_ = std::move(letters);
  return w;
}

std::string Word::str() const { return render(letters_, alphabet_); }

Word Word::substr(std::size_t pos, std::size_t len) const {
  if (pos > letters_.size()) throw Error(Errc::kOutOfRange, "substr position past end");
  Word w;
  w.alphabet_ = alphabet_;
  w.letters_ = letters_.substr(pos, len);
  return w;
}

Word& Word::operator+=(const Word& other) {
  if (other.alphabet_ == alphabet_) {
    letters_ += other.letters_;
    return *this;
  }
  Alphabet merged = alphabet_.merged(other.alphabet_);
  letters_ = remap(letters_, alphabet_, merged) + remap(other.letters_, other.alphabet_, merged);
  alphabet_ = std::move(merged);
  return *this;
}

std::string render(std::string_view letters, const Alphabet& alphabet) {
  std::string out(letters.size(), '?');
  for (std::size_t i = 0; i < letters.size(); ++i) {
    out[i] = alphabet.symbol(static_cast<Letter>(letters[i]));
  }
  return out;
}

std::string reversed(std::string_view letters) { return std::string(letters.rbegin(), letters.rend()); }

bool is_palindrome(std::string_view letters) noexcept {
  for (std::size_t i = 0, j = letters.size(); i + 1 < j; ++i, --j) {
    if (letters[i] != letters[j - 1]) return false;
  }
  return true;
}

Word reverse(const Word& w) { return Word(w.alphabet(), reversed(w.letters())); }

bool is_palindrome(const Word& w) noexcept { return is_palindrome(w.letters()); }

// ---------------------------------------------------------------- Morphism

Morphism::Morphism(Alphabet alphabet, std::vector<std::string> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
  if (images_.size() != alphabet_.size()) {
    throw Error(Errc::kInvalidArgument, "morphism needs exactly one image per letter");
  }
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i].empty()) {
      throw Error(Errc::kInvalidArgument,
                  std::string("erasing morphism: image of '") + alphabet_.symbol(static_cast<Letter>(i)) +
                      "' is empty");
    }
    for (char c : images_[i]) {
      if (static_cast<unsigned char>(c) >= alphabet_.size()) {
        throw Error(Errc::kInvalidArgument, "image letter outside alphabet");
      }
    }
  }
}

Morphism Morphism::parse(std::string_view spec) {
  std::vector<std::pair<char, std::string>> rules;
  std::string all;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t end = spec.find(',', pos);
    if (end == std::string_view::npos) end = spec.size();
    std::string_view rule = spec.substr(pos, end - pos);
    auto arrow = rule.find("->");
    if (arrow != 1 || rule.size() < 4) {
      throw Error(Errc::kParseError, "bad morphism rule '" + std::string(rule) + "' (want x->word)");
    }
    char src = rule[0];
    std::string img(rule.substr(3));
    for (const auto& [s, _] : rules) {
      if (s == src) throw Error(Errc::kParseError, std::string("duplicate rule for '") + src + "'");
    }
    rules.emplace_back(src, img);
    all.push_back(src);
    all += img;
    pos = end + 1;
  }
  Alphabet alphabet = Alphabet::infer(all);
  std::vector<std::string> images(alphabet.size());
  std::vector<bool> have(alphabet.size(), false);
  for (const auto& [src, img] : rules) {
    Letter l = *alphabet.index(src);
    images[l] = Word::parse(img, alphabet).letters();
    have[l] = true;
  }
  for (std::size_t i = 0; i < have.size(); ++i) {
    if (!have[i]) {
      throw Error(Errc::kParseError,
                  std::string("no rule for letter '") + alphabet.symbol(static_cast<Letter>(i)) + "'");
    }
  }
  return Morphism(std::move(alphabet), std::move(images));
}

Morphism Morphism::identity(const Alphabet& alphabet) {
  std::vector<std::string> images;
  for (std::size_t i = 0; i < alphabet.size(); ++i) images.emplace_back(1, static_cast<char>(i));
  return Morphism(alphabet, std::move(images));
}

std::string Morphism::apply(std::string_view letters) const {
  std::string out;
  for (char c : letters) out += images_.at(static_cast<unsigned char>(c));
  return out;
}

Word Morphism::apply(const Word& w) const {
  if (!(w.alphabet() == alphabet_)) {
    return Word(alphabet_, apply(Word::parse(w.str(), alphabet_).letters()));
  }
  return Word(alphabet_, apply(w.letters()));
}

bool Morphism::prolongable(Letter seed) const {
  const std::string& img = images_.at(seed);
  return img.size() >= 2 && static_cast<Letter>(img[0]) == seed;
}

std::string Morphism::str() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ',';
    out += alphabet_.symbol(static_cast<Letter>(i));
    out += "->";
    out += render(images_[i], alphabet_);
  }
  return out;
}

Word morphic_image(const Morphism& m, const Word& w) { return m.apply(w); }

Word fixed_point(const Morphism& m, Letter seed, std::size_t len) {
  if (seed >= m.alphabet().size() || !m.prolongable(seed)) {
    throw Error(Errc::kNotProlongable, "m(seed) must start with seed and have length >= 2");
  }
  // x = m(x): reading x[i] emits m(x[i]); the write head stays ahead of the
  // read head as long as the word keeps growing.
  std::string x(m.image(seed));
  std::size_t read = 1;
  while (x.size() < len) {
    if (read >= x.size()) throw Error(Errc::kImageTooSlow, "fixed point stopped growing");
    x += m.image(static_cast<Letter>(x[read++]));
  }
  x.resize(len);
  return Word(m.alphabet(), std::move(x));
}

Word fixed_point(const Morphism& m, char seed, std::size_t len) {
  auto idx = m.alphabet().index(seed);
  if (!idx) throw Error(Errc::kNotProlongable, std::string("seed '") + seed + "' not in alphabet");
  return fixed_point(m, *idx, len);
}

Word periodic_word(const Word& block, std::size_t len) {
  if (block.empty()) throw Error(Errc::kEmptyBlock, "periodic_word needs a non-empty block");
  std::string out;
  out.reserve(len);
  while (out.size() < len) out.append(block.letters().substr(0, len - out.size()));
  return Word(block.alphabet(), std::move(out));
}

Word s_word(std::size_t len) {
  static const Alphabet abc("abc");
  constexpr char a = 0, b = 1, c = 2;
  std::string out;
  out.reserve(len);
  // |s_n| = 2|s_{n-1}| + n; pick the first level long enough.
  std::size_t level = 1;
  for (std::size_t size = 2; size < len; size = 2 * size + level) ++level;

  struct Frame {
    std::size_t level;
    int stage;
  };
  std::vector<Frame> stack{{level, 0}};
  while (!stack.empty() && out.size() < len) {
    Frame& f = stack.back();
    if (f.level == 1) {
      out.push_back(b);
      if (out.size() < len) out.push_back(c);
      stack.pop_back();
      continue;
    }
    if (f.stage == 0) {
      f.stage = 1;
      stack.push_back({f.level - 1, 0});
    } else if (f.stage == 1) {
      f.stage = 2;
      for (std::size_t i = 0; i < f.level && out.size() < len; ++i) out.push_back(a);
      stack.push_back({f.level - 1, 0});
    } else {
      stack.pop_back();
    }
  }
  out.resize(std::min(out.size(), len));
  return Word(abc, std::move(out));
}

Word palindromic_closure(const Word& w) { return Word(w.alphabet(), closure_of(w.letters())); }

// -------------------------------------------------------- DirectiveSequence

DirectiveSequence::DirectiveSequence(Alphabet alphabet, std::string letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  if (letters_.empty()) throw Error(Errc::kInvalidArgument, "directive sequence must be non-empty");
  for (char c : letters_) {
    if (static_cast<unsigned char>(c) >= alphabet_.size()) {
      throw Error(Errc::kInvalidArgument, "directive letter outside alphabet");
    }
  }
}

DirectiveSequence DirectiveSequence::parse(std::string_view text) {
  Word w = Word::parse(text);
  return DirectiveSequence(w.alphabet(), std::string(w.letters()));
}

DirectiveSequence DirectiveSequence::cyclic(std::string_view pattern, std::size_t count) {
  if (pattern.empty()) throw Error(Errc::kInvalidArgument, "directive pattern must be non-empty");
  Word w = Word::parse(pattern);
  std::string letters;
  letters.reserve(count);
  while (letters.size() < count) letters += w.letters();
  letters.resize(std::max<std::size_t>(count, 1));
  return DirectiveSequence(w.alphabet(), std::move(letters));
}

Word episturmian_word(const DirectiveSequence& directive, std::size_t len) {
  std::string u;
  std::size_t k = 0;
  while (u.size() < len) {
    if (k >= directive.size()) {
      throw Error(Errc::kDirectiveExhausted, "directive ran out after " + std::to_string(u.size()) + " letters");
    }
    u.push_back(directive.letters()[k++]);
    u = closure_of(u);
  }
  u.resize(len);
  return Word(directive.alphabet(), std::move(u));
}

}  // namespace palrich
