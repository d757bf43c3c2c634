#include "palrich/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "palrich/counting.hpp"
#include "palrich/error.hpp"
#include "palrich/factors.hpp"
#include "palrich/palindromes.hpp"
#include "palrich/rauzy.hpp"

namespace palrich::cli {

using Json = nlohmann::ordered_json;

namespace {

// Thrown for bad flag combinations; maps to exit code 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string word;
  bool word_given = false;
  std::string generator_name;
  std::string file;
  GeneratorParams params;
  std::size_t n_max = kDefaultNMax;
  bool n_max_given = false;
  std::size_t prefix_cap = kDefaultPrefixCap;
  bool prefix_cap_given = false;
  std::string format = "text";
  std::string out_path;
  bool strict = false;
};

// What a command works on: a finite word or an infinite source.
struct Subject {
  bool finite = false;
  Word word;
  WordSource source;
  Json description;
};

Subject resolve_subject(const Config& cfg) {
  int given = cfg.word_given + !cfg.generator_name.empty() + !cfg.file.empty();
  if (given != 1) throw UsageError("give exactly one of --word, --generator, --file");
  Subject s;
  if (!cfg.generator_name.empty()) {
    s.source = generator(cfg.generator_name, cfg.params);
    s.description = {{"kind", "generator"}, {"name", s.source.name}};
    return s;
  }
  std::string text = cfg.word;
  if (!cfg.file.empty()) {
    std::ifstream in(cfg.file);
    if (!in) throw UsageError("cannot read " + cfg.file);
    std::stringstream ss;
    ss << in.rdbuf();
    text.clear();
    for (char c : ss.str())
      if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
  }
  if (text.empty()) throw UsageError("the word is empty");
  s.finite = true;
  s.word = Word::parse(text);
  s.description = {{"kind", cfg.file.empty() ? "word" : "file"}, {"length", s.word.size()}};
  if (s.word.size() <= 64) s.description["word"] = text;
  return s;
}

void check_limits(const Config& cfg) {
  if (cfg.n_max < 1) throw UsageError("--n-max must be at least 1");
  if (cfg.prefix_cap < 4 * (cfg.n_max + 1)) throw UsageError("prefix cap must be at least 4*(n_max+1)");
}

// Finite words default to the longest usable n_max.
std::size_t finite_n_max(const Config& cfg, const Word& w) {
  std::size_t n = cfg.n_max_given ? cfg.n_max : std::min(cfg.n_max, w.size() - 1);
  if (n + 1 > w.size()) throw UsageError("--n-max must be below the word length");
  return std::max<std::size_t>(n, 1);
}

Json optional_json(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

Json richness_json(const RichnessSummary& r) {
  Json j = {{"checked_length", r.checked_length},
            {"rich", r.incremental},
            {"incremental", r.incremental},
            {"returns", r.returns},
            {"count", r.count},
            {"checkers_agree", r.agree()},
            {"defect", r.defect},
            {"first_violation_prefix", optional_json(r.first_violation_prefix)}};
  if (r.witness) {
    j["witness"] = {{"palindrome", r.witness->first}, {"complete_return", r.witness->second}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

void emit(const Config& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out_path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + cfg.out_path);
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void require_format(const Config& cfg, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (cfg.format == a) return;
  throw UsageError("format '" + cfg.format + "' is not available for this command");
}

// ---------------------------------------------------------------- analyze

int cmd_analyze(const Config& cfg, std::ostream& out) {
  require_format(cfg, {"text", "csv", "json"});
  Subject subj = resolve_subject(cfg);
  check_limits(cfg);
  FactorIndex idx;
  std::string route = "finite";
  bool exact = true;
  std::size_t prefix_length = 0;
  RichnessSummary richness;
  std::size_t n_max = cfg.n_max;
  if (subj.finite) {
    n_max = finite_n_max(cfg, subj.word);
    idx = FactorIndex::build(subj.word, n_max);
    prefix_length = subj.word.size();
    richness = richness_summary(subj.word);
  } else {
    SourceIndex si = index_source(subj.source, n_max, cfg.prefix_cap);
    idx = std::move(si.index);
    route = si.route;
    exact = si.exact;
    prefix_length = si.prefix_length;
    richness = richness_summary(subj.source.prefix(kRichnessPrefix));
  }
  ComplexityProfile p = profile(idx, exact);

  struct Row {
    std::size_t n, C, P, right, left, bi;
    long long slack;
  };
  std::vector<Row> rows;
  for (std::size_t n = 0; n <= n_max; ++n) {
    SpecialFactorReport sf = special_factors(idx, n);
    rows.push_back({n, p.C[n], p.P[n], sf.right_special.size(), sf.left_special.size(), sf.bispecial.size(),
                    p.slack[n]});
  }

  std::ostringstream os;
  if (cfg.format == "csv") {
    os << "n,C,P,slack,right_special,left_special,bispecial,rich,stabilized\n";
    for (const auto& r : rows) {
      os << r.n << ',' << r.C << ',' << r.P << ',' << r.slack << ',' << r.right << ',' << r.left << ',' << r.bi
         << ',' << (richness.incremental ? "true" : "false") << ',' << (exact ? "true" : "false") << '\n';
    }
  } else if (cfg.format == "json") {
    Json j = {{"command", "analyze"},
              {"source", subj.description},
              {"n_max", n_max},
              {"route", route},
              {"stabilized", exact},
              {"prefix_length", prefix_length},
              {"reversal_closed", p.reversal_closed},
              {"equality", equality_II_check(p).holds},
              {"rows", Json::array()},
              {"richness", richness_json(richness)}};
    for (const auto& r : rows) {
      j["rows"].push_back({{"n", r.n},
                           {"C", r.C},
                           {"P", r.P},
                           {"slack", r.slack},
                           {"right_special", r.right},
                           {"left_special", r.left},
                           {"bispecial", r.bi}});
    }
    os << dump(j);
  } else {
    os << (subj.finite ? "word of length " + std::to_string(subj.word.size()) : subj.source.name) << "\n";
    os << "route " << route << (exact ? "" : " (NOT stabilized)") << ", prefix " << prefix_length << "\n";
    os << "  n     C     P  slack  rs  ls  bs\n";
    for (const auto& r : rows) {
      os << std::setw(3) << r.n << std::setw(6) << r.C << std::setw(6) << r.P << std::setw(7) << r.slack
         << std::setw(4) << r.right << std::setw(4) << r.left << std::setw(4) << r.bi << "\n";
    }
    os << "reversal closed: " << (p.reversal_closed ? "yes" : "no") << "\n";
    os << "rich (first " << richness.checked_length << " letters): " << (richness.incremental ? "yes" : "no")
       << ", defect " << richness.defect;
    if (richness.witness) os << ", return " << richness.witness->second << " to " << richness.witness->first;
    os << "\n";
  }
  emit(cfg, os.str(), out);
  return !exact && cfg.strict ? kInconclusive : kOk;
}

// ------------------------------------------------------------------ graph

int cmd_graph(const Config& cfg, std::size_t n, const std::string& tier, std::ostream& out) {
  require_format(cfg, {"text", "dot"});
  if (tier != "raw" && tier != "reduced" && tier != "super") throw UsageError("--tier is raw, reduced or super");
  Subject subj = resolve_subject(cfg);
  std::size_t n_max = cfg.n_max_given ? cfg.n_max : std::max<std::size_t>(n, 1);
  if (n > n_max) throw UsageError("--n must not exceed --n-max");
  Config limits = cfg;
  limits.n_max = n_max;
  check_limits(limits);
  FactorIndex idx;
  bool exact = true;
  if (subj.finite) {
    if (n_max + 1 > subj.word.size()) throw UsageError("the word is too short for this order");
    idx = FactorIndex::build(subj.word, n_max);
  } else {
    SourceIndex si = index_source(subj.source, n_max, cfg.prefix_cap);
    idx = std::move(si.index);
    exact = si.exact;
  }
  RauzyGraph g = build_rauzy(idx, n);
  std::string dot;
  if (tier == "raw") {
    dot = to_dot(g);
  } else {
    ReducedRauzyGraph rg = reduce(g);
    dot = tier == "reduced" ? to_dot(rg) : to_dot(super_reduce(rg).graph);
  }
  emit(cfg, dot, out);
  return !exact && cfg.strict ? kInconclusive : kOk;
}

// ----------------------------------------------------------------- verify

Json order_json(const OrderRecord& o) {
  Json j = {{"n", o.n},
            {"slack", o.slack},
            {"equality", o.equality},
            {"cycle_order", o.cycle_order},
            {"condition1", o.condition1},
            {"condition2", o.condition2},
            {"s", o.s},
            {"super_edges", o.super_edges},
            {"loops", o.loops},
            {"nonpalindromic_paths", o.nonpalindromic_paths}};
  j["condition1_witness"] = o.condition1_witness ? Json(*o.condition1_witness) : Json(nullptr);
  if (o.counting) {
    j["counting"] = {{"lhs", o.counting->lhs}, {"rhs", o.counting->rhs},
                     {"central_factors_ok", o.counting->central_factors_ok}};
  } else {
    j["counting"] = nullptr;
  }
  return j;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json"});
  Subject subj = resolve_subject(cfg);
  std::ostringstream os;
  if (subj.finite) {
    Theorem2Report r = theorem2_check(subj.word);
    if (cfg.format == "json") {
      os << dump({{"command", "verify"},
                  {"mode", "finite-palindrome"},
                  {"source", subj.description},
                  {"palindrome_count", r.palindrome_count},
                  {"returns", r.returns},
                  {"equality", r.equality},
                  {"agree", r.agree()}});
    } else {
      os << "palindrome of length " << subj.word.size() << "\n";
      os << "  |w|+1 palindromes:             " << (r.palindrome_count ? "yes" : "no") << "\n";
      os << "  complete returns palindromic:  " << (r.returns ? "yes" : "no") << "\n";
      os << "  equality for 0 <= i <= |w|:    " << (r.equality ? "yes" : "no") << "\n";
      os << (r.agree() ? "all three agree\n" : "DISAGREEMENT\n");
    }
    emit(cfg, os.str(), out);
    return r.agree() ? kOk : kInconsistent;
  }

  check_limits(cfg);
  TheoremReport r = theorem1_experiment(subj.source, cfg.n_max, cfg.prefix_cap);
  if (cfg.format == "json") {
    Json j = {{"command", "verify"},
              {"mode", "infinite-word"},
              {"source", subj.description},
              {"n_max", r.n_max},
              {"route", r.route},
              {"stabilized", r.exact},
              {"prefix_length", r.prefix_length},
              {"reversal_closed", r.reversal_closed},
              {"closure_witness", r.closure_witness ? Json(*r.closure_witness) : Json(nullptr)},
              {"rich", r.rich},
              {"richness", richness_json(r.richness)},
              {"equality", {{"holds", r.equality.holds}, {"first_failure", optional_json(r.equality.first_failure)}}},
              {"conditions", {{"holds", r.conditions_all}, {"first_failure", optional_json(r.first_condition_failure)}}},
              {"orders", Json::array()},
              {"discrepancies", r.discrepancies},
              {"verdict", verdict_name(r.verdict)},
              {"triangle_closes", r.triangle_closes()}};
    for (const auto& o : r.orders) j["orders"].push_back(order_json(o));
    os << dump(j);
  } else {
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    os << r.name << ", n <= " << r.n_max << ", route " << r.route << (r.exact ? "" : " (NOT stabilized)") << "\n";
    os << "reversal closed: " << yn(r.reversal_closed);
    if (r.closure_witness) os << " (missing reversal of " << *r.closure_witness << ")";
    os << "\n";
    os << "rich:       " << yn(r.rich) << "\n";
    os << "equality:   " << yn(r.equality.holds);
    if (r.equality.first_failure) os << " (first failure n = " << *r.equality.first_failure << ")";
    os << "\n";
    os << "conditions: " << yn(r.conditions_all);
    if (r.first_condition_failure) os << " (first failure n = " << *r.first_condition_failure << ")";
    os << "\n";
    for (const auto& d : r.discrepancies) os << "DISCREPANCY: " << d << "\n";
    os << "verdict: " << verdict_name(r.verdict) << "\n";
  }
  emit(cfg, os.str(), out);
  switch (r.verdict) {
    case Verdict::kDiscrepancy: return kInconsistent;
    case Verdict::kInconclusive: return cfg.strict ? kInconclusive : kOk;
    default: return kOk;
  }
}

// ------------------------------------------------------------------ count

int cmd_count(const Config& cfg, const std::string& kind_name, std::size_t alphabet, std::ostream& out) {
  require_format(cfg, {"text", "csv", "json"});
  CountKind kind;
  if (kind_name == "sturmian") kind = CountKind::kSturmian;
  else if (kind_name == "sturmian-palindrome") kind = CountKind::kSturmianPalindrome;
  else if (kind_name == "rich") kind = CountKind::kRich;
  else if (kind_name == "balanced-oracle") kind = CountKind::kBalancedOracle;
  else throw UsageError("unknown --kind " + kind_name);
  const std::size_t n_max = cfg.n_max_given ? cfg.n_max : 14;
  CountTable t = count_table(kind, n_max, alphabet);

  // Independent values where they are affordable.
  std::map<std::size_t, Count> oracle;
  for (const auto& [n, v] : t.values) {
    (void)v;
    switch (kind) {
      case CountKind::kSturmian:
        if (n <= kMaxBalancedLength) oracle[n] = enumerate_balanced(n).size();
        break;
      case CountKind::kSturmianPalindrome:
        if (n <= kMaxBalancedLength) oracle[n] = sturmian_palindrome_enumeration_oracle(n);
        break;
      case CountKind::kBalancedOracle:
        oracle[n] = sturmian_count(n);
        break;
      case CountKind::kRich: {
        Count words = 1;
        for (std::size_t i = 0; i < n && words <= (Count{1} << 24); ++i) words *= alphabet;
        if (words <= (Count{1} << 20)) oracle[n] = count_rich_naive(alphabet, n);
        break;
      }
    }
  }
  bool agree = true;
  for (const auto& [n, v] : oracle) agree = agree && t.values.at(n) == v;

  std::ostringstream os;
  if (cfg.format == "csv") {
    os << t.to_csv();
  } else if (cfg.format == "json") {
    Json j = {{"command", "count"},
              {"kind", count_kind_name(kind)},
              {"alphabet_size", t.alphabet_size},
              {"provenance", t.provenance},
              {"rows", Json::array()},
              {"oracle_agrees", agree}};
    for (const auto& [n, v] : t.values) {
      auto it = oracle.find(n);
      j["rows"].push_back({{"n", n},
                           {"count", v},
                           {"oracle", it == oracle.end() ? Json(nullptr) : Json(it->second)},
                           {"conventional", n == 0}});
    }
    os << dump(j);
  } else {
    os << count_kind_name(kind) << " counts (" << t.provenance << ")\n";
    for (const auto& [n, v] : t.values) {
      os << std::setw(3) << n << "  " << v;
      auto it = oracle.find(n);
      if (it != oracle.end()) os << (it->second == v ? "  ok" : "  ORACLE " + std::to_string(it->second));
      if (n == 0) os << "  (empty word, by convention)";
      os << "\n";
    }
  }
  emit(cfg, os.str(), out);
  return agree ? kOk : kInconsistent;
}

// ----------------------------------------------------------------- search

// Samples morphisms a->a..., other letters anything, and keeps the fixed
// points that look recurrent but are not closed under reversal. Equality
// holding there would be a candidate, never a proof.
int cmd_search(const Config& cfg, std::size_t samples, unsigned seed, std::ostream& out) {
  require_format(cfg, {"text", "json"});
  const std::size_t n_max = cfg.n_max_given ? cfg.n_max : 10;
  std::mt19937 rng(seed);
  const std::string letters = "abc";
  Json tested = Json::array();
  std::size_t skipped = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    std::string spec;
    for (char c : letters) {
      std::size_t len = 1 + rng() % 4;
      std::string img;
      if (c == 'a') {
        img = "a";
        len = std::max<std::size_t>(len, 2);
      }
      while (img.size() < len) img.push_back(letters[rng() % letters.size()]);
      if (!spec.empty()) spec += ',';
      spec += std::string(1, c) + "->" + img;
    }
    try {
      WordSource src = morphic_source(spec);
      Word prefix = src.prefix(1 << 14);
      if (Alphabet::infer(prefix.str()).size() < 2) {
        ++skipped;
        continue;
      }
      FactorIndex probe = FactorIndex::build(prefix, n_max);
      if (!recurrence_probe(probe, n_max, 2)) {
        ++skipped;
        continue;
      }
      SourceIndex si = index_source(src, n_max, std::min<std::size_t>(cfg.prefix_cap, 1 << 16));
      ComplexityProfile p = profile(si.index, si.exact);
      if (p.reversal_closed) {
        ++skipped;
        continue;
      }
      EqualityCheck eq = equality_II_check(p);
      tested.push_back({{"morphism", spec}, {"equality", eq.holds}, {"first_failure", optional_json(eq.first_failure)}});
    } catch (const Error&) {
      ++skipped;
    }
  }
  std::size_t holds = 0;
  for (const auto& t : tested) holds += t["equality"].get<bool>();
  std::ostringstream os;
  if (cfg.format == "json") {
    os << dump({{"command", "search"},
                {"samples", samples},
                {"seed", seed},
                {"n_max", n_max},
                {"skipped", skipped},
                {"tested", tested},
                {"equality_holds", holds}});
  } else {
    os << tested.size() << " recurrent-looking, non-closed fixed points tested (" << skipped << " skipped)\n";
    for (const auto& t : tested) {
      os << "  " << t["morphism"].get<std::string>() << ": equality "
         << (t["equality"].get<bool>() ? "holds up to n_max" : "fails at n = " + t["first_failure"].dump()) << "\n";
    }
  }
  emit(cfg, os.str(), out);
  return kOk;
}

void add_source_options(CLI::App* sub, Config& cfg) {
  sub->add_option("--word", cfg.word, "literal finite word")->each([&](const std::string&) { cfg.word_given = true; });
  sub->add_option("--generator", cfg.generator_name, "named infinite word");
  sub->add_option("--file", cfg.file, "file holding a finite word");
  sub->add_option("--k", cfg.params.k, "family parameter (psi-of-fibonacci, periodic)");
  sub->add_option("--block", cfg.params.block, "periodic block");
  sub->add_option("--directive", cfg.params.directive, "episturmian directive pattern");
  sub->add_option("--morphism", cfg.params.morphism, "morphism, e.g. a->ab,b->a");
  sub->add_option("--seed-letter", cfg.params.seed, "fixed point seed letter");
}

void add_common_options(CLI::App* sub, Config& cfg) {
  sub->add_option("--n-max", cfg.n_max, "largest factor length")->each([&](const std::string&) {
    cfg.n_max_given = true;
  });
  sub->add_option("--prefix-cap", cfg.prefix_cap, "prefix length cap")->each([&](const std::string&) {
    cfg.prefix_cap_given = true;
  });
  sub->add_option("--format", cfg.format, "text, csv, json or dot");
  sub->add_option("--out", cfg.out_path, "output file");
  sub->add_flag("--strict", cfg.strict, "exit 2 when prefixes do not stabilize");
}

}  // namespace

std::vector<std::string> generator_names() {
  return {"fibonacci", "tribonacci", "thue-morse", "cassaigne-aab", "quadratic-abab",
          "psi-of-fibonacci", "periodic", "s-word", "episturmian", "morphic"};
}

WordSource generator(const std::string& name, const GeneratorParams& p) {
  if (name == "fibonacci") return fibonacci_source();
  if (name == "tribonacci") return tribonacci_source();
  if (name == "thue-morse") return thue_morse_source();
  if (name == "cassaigne-aab") return cassaigne_source();
  if (name == "quadratic-abab") return quadratic_source();
  if (name == "s-word") return s_word_source();
  if (name == "psi-of-fibonacci") return psi_of_fibonacci_source(p.k.value_or(0));
  if (name == "periodic") {
    if (!p.block.empty()) return periodic_source(p.block);
    if (p.k) return periodic_family_source(*p.k);
    throw Error(Errc::kInvalidArgument, "periodic needs --block or --k");
  }
  if (name == "episturmian") {
    if (p.directive.empty()) throw Error(Errc::kInvalidArgument, "episturmian needs --directive");
    return episturmian_source(p.directive);
  }
  if (name == "morphic") {
    if (p.morphism.empty()) throw Error(Errc::kInvalidArgument, "morphic needs --morphism");
    return morphic_source(p.morphism, p.seed);
  }
  std::string known;
  for (const auto& n : generator_names()) known += (known.empty() ? "" : ", ") + n;
  throw Error(Errc::kInvalidArgument, "unknown generator '" + name + "' (known: " + known + ")");
}

std::size_t prefix_cap_from_env() {
  const char* v = std::getenv("PALRICH_MAX_PREFIX");
  if (!v || !*v) return kDefaultPrefixCap;
  char* end = nullptr;
  unsigned long long cap = std::strtoull(v, &end, 10);
  if (*end != '\0' || cap == 0) throw Error(Errc::kInvalidArgument, "PALRICH_MAX_PREFIX must be a positive integer");
  return static_cast<std::size_t>(cap);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"palrich: palindromic richness toolkit"};
  app.require_subcommand(1);
  Config cfg;

  auto* analyze = app.add_subcommand("analyze", "factor and palindrome counts per length");
  add_source_options(analyze, cfg);
  add_common_options(analyze, cfg);

  std::size_t graph_n = 1;
  std::string tier = "reduced";
  auto* graph = app.add_subcommand("graph", "Rauzy graph of order n as DOT");
  add_source_options(graph, cfg);
  add_common_options(graph, cfg);
  graph->add_option("--n", graph_n, "order")->required();
  graph->add_option("--tier", tier, "raw, reduced or super");

  auto* verify = app.add_subcommand("verify", "richness / equality / graph conditions");
  add_source_options(verify, cfg);
  add_common_options(verify, cfg);

  std::string kind = "sturmian";
  std::size_t alphabet = 2;
  auto* count = app.add_subcommand("count", "count tables");
  add_common_options(count, cfg);
  count->add_option("--kind", kind, "sturmian, sturmian-palindrome, rich or balanced-oracle");
  count->add_option("--alphabet", alphabet, "alphabet size for rich counts");

  std::size_t samples = 20;
  unsigned seed = 1;
  auto* search = app.add_subcommand("search", "sample non-closed recurrent fixed points");
  add_common_options(search, cfg);
  search->add_option("--samples", samples, "number of morphisms");
  search->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (!cfg.prefix_cap_given) cfg.prefix_cap = prefix_cap_from_env();
    if (*analyze) return cmd_analyze(cfg, out);
    if (*graph) return cmd_graph(cfg, graph_n, tier, out);
    if (*verify) return cmd_verify(cfg, out);
    if (*count) return cmd_count(cfg, kind, alphabet, out);
    if (*search) return cmd_search(cfg, samples, seed, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::kInconsistent ? kInconsistent : kUsage;
  }
  return kUsage;
}

}  // namespace palrich::cli
