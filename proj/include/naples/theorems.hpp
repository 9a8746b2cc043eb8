#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace naples {

struct TheoremInfo {
  std::string id;
  std::string summary;
  int default_n;
  int default_k;
};

struct TheoremReport {
  std::string id;
  int n_max = 0;
  int k_max = 0;
  std::uint64_t cases = 0;     ///< individual comparisons made
  std::uint64_t failures = 0;  ///< total counterexamples, including unlisted ones
  std::vector<std::string> counterexamples;  ///< sorted; at most 100 kept

  bool ok() const { return failures == 0; }
};

/// Registered checks in a fixed order. Each one compares a library result
/// against brute-force parking (or another independent count) exhaustively
/// up to the given sizes.
const std::vector<TheoremInfo>& registered_theorems();

/// Runs one registered check; throws DomainError for an unknown id or sizes
/// beyond the oracle caps.
TheoremReport check_theorem(std::string_view id, int n_max, int k_max);
TheoremReport check_theorem(std::string_view id);
/// Every registered check at its default sizes ("verify all").
std::vector<TheoremReport> check_all();

}  // namespace naples
