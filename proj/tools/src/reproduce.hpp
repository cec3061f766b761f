#pragma once

// Recomputation of the published worked examples and the table of ternary
// quantum codes.

#include <string>
#include <vector>

#include "json_io.hpp"

namespace ringcode::cli {

struct ReproduceOptions {
  unsigned jobs = 1;
  unsigned d_cap = 7;
  std::uint64_t budget = 0;  // 0: library default
};

const std::vector<std::string>& reproduce_targets();  // without "all"

/// {"targets": [...], "summary": {...}}. Each target has status
/// "match" | "discrepant" | "mismatch", published and computed values, checks, notes.
json reproduce(const std::string& target, const ReproduceOptions& opt);

/// True when some target reports "mismatch".
bool has_mismatch(const json& report);

}  // namespace ringcode::cli
