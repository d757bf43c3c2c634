#pragma once

// Command-line front end: analyze, graph, verify, count, search.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "palrich/analysis.hpp"

namespace palrich::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kInconclusive = 2, kInconsistent = 3 };

struct GeneratorParams {
  std::optional<std::size_t> k;
  std::string block;
  std::string directive;
  std::string morphism;
  char seed = 'a';
};

// Registry lookup; InvalidArgument for unknown names or missing parameters.
WordSource generator(const std::string& name, const GeneratorParams& params);
std::vector<std::string> generator_names();

// Prefix cap from PALRICH_MAX_PREFIX, or the default. InvalidArgument if
// the variable is set but not a positive integer.
std::size_t prefix_cap_from_env();

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace palrich::cli
