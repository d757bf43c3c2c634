#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "oracles.hpp"
#include "palrich/cli.hpp"
#include "palrich/counting.hpp"
#include "palrich/error.hpp"

using namespace palrich;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "palrich");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(PALRICH_GOLDEN_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("analyze fibonacci as csv") {
  Result r = run({"analyze", "--generator", "fibonacci", "--n-max", "20", "--format", "csv"});
  REQUIRE(r.code == cli::kOk);
  auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 22);
  CHECK(rows[0][0] == "n");
  for (std::size_t n = 0; n <= 20; ++n) {
    CHECK(rows[n + 1][1] == std::to_string(n + 1));
    CHECK(rows[n + 1][3] == "0");
  }
  CHECK(r.out == golden("cli/analyze_fibonacci_n20.csv"));
  CHECK(r.out.find('\r') == std::string::npos);
}

TEST_CASE("analyze a literal word as json") {
  Result r = run({"analyze", "--word", "abca", "--format", "json"});
  REQUIRE(r.code == cli::kOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["richness"]["rich"] == false);
  CHECK(j["richness"]["defect"] == 1);
  CHECK(j["rows"].size() == 4);
  CHECK(j["route"] == "finite");
}

TEST_CASE("usage errors exit with 1") {
  CHECK(run({"analyze", "--word", ""}).code == cli::kUsage);
  CHECK(run({"analyze"}).code == cli::kUsage);
  CHECK(run({"analyze", "--word", "ab", "--generator", "fibonacci"}).code == cli::kUsage);
  CHECK(run({"analyze", "--generator", "nope"}).code == cli::kUsage);
  CHECK(run({"analyze", "--generator", "periodic"}).code == cli::kUsage);
  CHECK(run({"analyze", "--generator", "fibonacci", "--n-max", "0"}).code == cli::kUsage);
  CHECK(run({"analyze", "--generator", "fibonacci", "--n-max", "30", "--prefix-cap", "100"}).code == cli::kUsage);
  CHECK(run({"analyze", "--generator", "fibonacci", "--format", "dot"}).code == cli::kUsage);
  CHECK(run({"analyze", "--word", "abc", "--n-max", "3"}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"graph", "--generator", "fibonacci"}).code == cli::kUsage);
  CHECK(run({"graph", "--generator", "fibonacci", "--n", "2", "--tier", "hyper"}).code == cli::kUsage);
  CHECK(run({"count", "--kind", "rich", "--n-max", "25"}).code == cli::kUsage);
  CHECK(run({"count", "--kind", "rich", "--alphabet", "5", "--n-max", "3"}).code == cli::kUsage);
  CHECK(run({"count", "--kind", "primes"}).code == cli::kUsage);
  Result e = run({"verify", "--word", "ab"});
  CHECK(e.code == cli::kUsage);
  CHECK(e.err.find("NotAPalindrome") != std::string::npos);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("graph tiers") {
  Result r = run({"graph", "--generator", "fibonacci", "--n", "2", "--tier", "reduced"});
  REQUIRE(r.code == cli::kOk);
  CHECK(r.out == golden("fibonacci_reduced_n2.dot"));
  r = run({"graph", "--generator", "fibonacci", "--n", "2", "--tier", "super"});
  CHECK(r.out == golden("fibonacci_super_n2.dot"));
  r = run({"graph", "--generator", "fibonacci", "--n", "3", "--tier", "raw", "--format", "dot"});
  CHECK(r.out == golden("cli/graph_fibonacci_raw_n3.dot"));
  // Raw edges are exactly the length-4 factors.
  const std::string f = oracle::iterate({{'a', "ab"}, {'b', "a"}}, 'a', 2000);
  for (const auto& x : oracle::factors(f, 4)) CHECK(r.out.find("[label=\"" + x + "\"]") != std::string::npos);

  for (const char* tier : {"raw", "reduced", "super"}) {
    r = run({"graph", "--word", "aaaaaaaa", "--n", "3", "--tier", tier});
    REQUIRE(r.code == cli::kOk);
    CHECK(r.out.find("aaa") != std::string::npos);
  }
  r = run({"graph", "--word", "aaaaaaaa", "--n", "3", "--tier", "reduced"});
  CHECK(r.out == "digraph reduced_3 {\n  graph [note=\"no special factors\"];\n  \"aaa\";\n"
                 "  \"aaa\" -> \"aaa\" [label=\"aaaa\"];\n}\n");
  r = run({"graph", "--word", "aaaaaaaa", "--n", "3", "--tier", "super"});
  CHECK(r.out == "graph super_3 {\n  graph [note=\"no special factors\"];\n  \"[aaa]\";\n}\n");
}

TEST_CASE("verify commands") {
  Result r = run({"verify", "--generator", "fibonacci", "--n-max", "30"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("verdict: consistent") != std::string::npos);

  r = run({"verify", "--generator", "thue-morse", "--n-max", "10", "--format", "json"});
  CHECK(r.code == cli::kOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["rich"] == false);
  CHECK(j["equality"]["holds"] == false);
  CHECK(j["verdict"] == "consistent");
  CHECK(r.out == golden("cli/verify_thue_morse_n10.json"));

  r = run({"verify", "--word", "aabaa", "--format", "json"});
  CHECK(r.code == cli::kOk);
  j = nlohmann::json::parse(r.out);
  CHECK(j["agree"] == true);
  CHECK(j["palindrome_count"] == true);

  r = run({"verify", "--generator", "s-word", "--n-max", "10", "--format", "json"});
  CHECK(r.code == cli::kOk);
  j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "not-applicable");
  CHECK(j["reversal_closed"] == false);
}

TEST_CASE("count commands") {
  Result r = run({"count", "--kind", "sturmian", "--n-max", "14", "--format", "csv"});
  REQUIRE(r.code == cli::kOk);
  CHECK(csv_rows(r.out).size() == 16);
  CHECK(r.out == golden("cli/count_sturmian_n14.csv"));
  r = run({"count", "--kind", "sturmian", "--n-max", "14", "--format", "json"});
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["oracle_agrees"] == true);
  for (const auto& row : j["rows"]) CHECK(row["count"] == row["oracle"]);

  r = run({"count", "--kind", "rich", "--alphabet", "2", "--n-max", "12", "--format", "json"});
  j = nlohmann::json::parse(r.out);
  CHECK(j["rows"][3]["count"] == 8);
  for (std::size_t n = 1; n < j["rows"].size(); ++n) CHECK(j["rows"][n]["count"] >= j["rows"][n - 1]["count"]);

  r = run({"count", "--kind", "sturmian-palindrome", "--n-max", "0", "--format", "json"});
  j = nlohmann::json::parse(r.out);
  REQUIRE(j["rows"].size() == 1);
  CHECK(j["rows"][0]["count"] == 1);
  CHECK(j["rows"][0]["conventional"] == true);
}

TEST_CASE("prefix cap from the environment") {
  setenv("PALRICH_MAX_PREFIX", "130", 1);
  CHECK(cli::prefix_cap_from_env() == 130);
  // No exact language: the capped prefix stays unstable.
  Result r = run({"analyze", "--generator", "episturmian", "--directive", "abc", "--format", "json"});
  CHECK(r.code == cli::kOk);
  CHECK(nlohmann::json::parse(r.out)["stabilized"] == false);
  r = run({"analyze", "--generator", "episturmian", "--directive", "abc", "--strict"});
  CHECK(r.code == cli::kInconclusive);
  r = run({"verify", "--generator", "episturmian", "--directive", "abc", "--strict"});
  CHECK(r.code == cli::kInconclusive);
  r = run({"verify", "--generator", "episturmian", "--directive", "abc", "--format", "json"});
  CHECK(r.code == cli::kOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "inconclusive");
  CHECK(j["discrepancies"].empty());
  // A source with a language falls back to it.
  r = run({"analyze", "--generator", "fibonacci", "--format", "json"});
  CHECK(nlohmann::json::parse(r.out)["route"] == "language");
  // An explicit flag wins over the variable.
  r = run({"analyze", "--generator", "episturmian", "--directive", "abc", "--prefix-cap", "1048576", "--format",
           "json"});
  CHECK(nlohmann::json::parse(r.out)["stabilized"] == true);
  setenv("PALRICH_MAX_PREFIX", "lots", 1);
  CHECK(run({"analyze", "--generator", "fibonacci"}).code == cli::kUsage);
  unsetenv("PALRICH_MAX_PREFIX");
  CHECK(cli::prefix_cap_from_env() == kDefaultPrefixCap);
}

TEST_CASE("output is deterministic and can go to a file") {
  const std::string path = "test_cli_out.json";
  Result a = run({"verify", "--generator", "tribonacci", "--n-max", "8", "--format", "json", "--out", path});
  CHECK(a.code == cli::kOk);
  CHECK(a.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  Result b = run({"verify", "--generator", "tribonacci", "--n-max", "8", "--format", "json"});
  CHECK(ss.str() == b.out);
  CHECK(run({"verify", "--generator", "tribonacci", "--n-max", "8", "--format", "json"}).out == b.out);
  std::remove(path.c_str());
}

TEST_CASE("registry") {
  auto names = cli::generator_names();
  CHECK(names.size() == 10);
  cli::GeneratorParams p;
  p.k = 1;
  CHECK(cli::generator("psi-of-fibonacci", p).name == "psi-of-fibonacci:1");
  CHECK(cli::generator("periodic", p).prefix(8).str() == "aabaabab");
  p.morphism = "a->aba,b->bb";
  CHECK(cli::generator("morphic", p).prefix(9).str() == "ababbabab");
  CHECK_THROWS_AS(cli::generator("episturmian", cli::GeneratorParams{}), Error);
}
