#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace psu {

struct VerifyOptions {
  std::uint64_t from = 2;
  std::uint64_t to = 100;
  unsigned workers = 0;            // 0 = hardware concurrency
  std::uint64_t ineq_bound = 500;  // run the factorial-order sweep for n <= this
  // Test hook: makes the closed-form value seen by the comparator wrong at
  // this n, so the failure/exit-code path can be exercised end to end.
  std::optional<std::uint64_t> inject_fault_at;
};

struct CheckFailure {
  std::uint64_t n = 0;
  std::string check;
  std::map<std::string, std::int64_t> witness;
};

struct VerifySummary {
  std::uint64_t values_checked = 0;
  std::uint64_t failures = 0;  // number of n values with a failed check
  std::map<std::string, std::uint64_t> check_passes;
  std::map<std::string, std::uint64_t> check_failures;
  // Smallest failing n per check, and overall.
  std::map<std::string, CheckFailure> first_failure_by_check;
  std::optional<CheckFailure> first_failure;
};

// The per-n checks, in reporting order.
const std::vector<std::string>& verify_check_names();

/*
 * Cross-verifies every n in [from, to]: the four b-table routes agree, the
 * a-table is integral with the product and entry form of the multiplier
 * theorem, the factorial-order inequality sweep holds (n <= ineq_bound),
 * the primary decomposition reassembles the b-table degree by degree, and
 * the top multiplier equals n. Work is fanned out across workers; the
 * summary is merged in n order and independent of the worker count.
 */
VerifySummary verify_range(const VerifyOptions& opts);

}  // namespace psu
