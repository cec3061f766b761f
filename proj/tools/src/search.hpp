#pragma once

// Exhaustive search of the Hermitian self-orthogonality region for good
// quantum codes.

#include <cstdint>
#include <string>

#include "json_io.hpp"

namespace ringcode::cli {

struct SearchTask {
  unsigned p = 3, m = 1, n = 5, e = 0;
  std::string alpha = "w^4";
  std::string construction = "symplectic";  // or "hermitian" (p = 2)
  unsigned min_k = 1;
  std::size_t result_cap = 20;
  std::uint64_t region_cap = std::uint64_t{1} << 20;
  unsigned d_cap = 8;
  std::uint64_t budget = 0;  // 0: library default
  unsigned jobs = 1;
};

/// Number of exponent vectors in the self-orthogonality region.
std::uint64_t region_size(const cyclo::CosetStructure& cs);

/// Ranked by d descending, then k descending, then exponent vector; one entry
/// per distinct [[n,k,d]]. Throws BudgetExceeded when the region exceeds the cap.
json run_search(const SearchTask& task);

}  // namespace ringcode::cli
