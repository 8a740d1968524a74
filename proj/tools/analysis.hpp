#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace macaulay::cli {

using Report = nlohmann::ordered_json;

struct AnalysisRequest {
  std::string command;  // hilbert | socle | delta | mmatrix | compressed | graded | paper-examples
  std::size_t num_vars = 0;
  std::vector<std::string> generators;
  std::optional<int> q;
  std::optional<int> p;
  bool check = false;
  std::uint64_t seed = 1;
};

const std::vector<std::string>& commands();

/// Runs one analysis. Library exceptions propagate; see exit_code().
Report run(const AnalysisRequest& request);

/// Every pinned example with its expectations; "all_passed" sums them up.
Report paper_examples(std::uint64_t seed);

/// Indented "key: value" rendering of a report.
std::string render_text(const Report& report);

/// 1 parse error, 2 validation error, 3 invariant violation, 4 anything else.
int exit_code(const std::exception& error);

}  // namespace macaulay::cli
