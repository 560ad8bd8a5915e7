#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qapblock::verify {

struct VerifyConfig {
  std::uint64_t seed = 20160301;
  /// Largest n handed to the permutation oracle by the random suites.
  std::size_t max_n = 8;
  /// Largest r + s + t in the exhaustive two-block sweep.
  std::size_t two_block_max = 9;
  /// Multiplies every random sample count (at least one sample survives).
  double sample_scale = 1.0;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const { return checks > 0 && failures == 0; }
};

inline constexpr int kCriterionCount = 10;

/// Runs criterion `id` in 1..10. Deterministic in (config, id).
CriterionResult run_criterion(int id, const VerifyConfig& config);

std::vector<CriterionResult> run_criteria(const std::vector<int>& ids, const VerifyConfig& config);

/// "PASS  criterion 3  <title>  (200 checks)" or a FAIL line with the first failure.
std::string format_result(const CriterionResult& result);

}  // namespace qapblock::verify
