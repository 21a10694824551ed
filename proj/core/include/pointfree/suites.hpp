#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pointfree {

struct ClaimResult {
  std::string claim;
  std::size_t checked = 0;
  std::size_t failed = 0;
  /// Divergences recorded outside the claim's hypotheses; never a failure.
  std::size_t logged = 0;
  std::string witness;  // first failure, smallest frames first
  std::string logged_example;
  bool pass() const { return failed == 0; }
};

struct SuiteReport {
  std::string suite;
  std::vector<ClaimResult> claims;
  double seconds = 0;

  bool pass() const;
  /// Nullptr when the suite has no such claim.
  const ClaimResult* find(std::string_view claim) const;
  std::string text() const;
  std::string json() const;
};

struct SuiteOptions {
  std::size_t max_poset_size = 5;
  std::uint64_t seed = 1;
  /// Apply the suite's seeded law-breaking mutation to its inputs.
  bool mutate = false;
  /// Randomised cases per sampled claim.
  std::size_t samples = 1000;
};

/// Registered suite ids, in run order.
const std::vector<std::string>& suite_names();
/// Throws UnknownSuite.
SuiteReport run_suite(std::string_view name, const SuiteOptions& options = {});

}  // namespace pointfree
