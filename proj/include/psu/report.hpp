#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "psu/verify.hpp"

namespace psu {

inline constexpr const char* kToolName = "psu-torsion";
inline constexpr const char* kToolVersion = "1.0.0";

struct CheckResult {
  std::string name;
  bool pass = true;
  std::map<std::string, std::int64_t> witness;  // required when pass == false
  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

/*
 * One machine-readable record per invocation:
 *   { "command": ..., "n": ... | "range": [lo, hi], "payload": {...},
 *     "checks": [ { "name": ..., "pass": ..., "witness"?: {...} } ] }
 * A failed check always carries a witness (enforced at emission).
 */
struct ReportRecord {
  std::string command;
  std::optional<std::uint64_t> n;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> range;
  nlohmann::json payload = nlohmann::json::object();
  std::vector<CheckResult> checks;

  friend bool operator==(const ReportRecord&, const ReportRecord&) = default;
};

nlohmann::json to_json(const ReportRecord& r);
ReportRecord record_from_json(const nlohmann::json& j);

enum class Oracle { Brute, Closed, Schubert, Spectral };
std::optional<Oracle> oracle_from_name(const std::string& name);
const char* oracle_name(Oracle o);

// Record builders: compute the command's data and package it.
ReportRecord make_factor_record(std::uint64_t n);
ReportRecord make_tables_record(std::uint64_t n, Oracle oracle);
ReportRecord make_chow_record(std::uint64_t n);
ReportRecord make_cstar_record(std::uint64_t n,
                               const std::vector<std::uint64_t>& indices);
ReportRecord make_verify_record(const VerifySummary& summary,
                                const VerifyOptions& opts);

// Deterministic human-readable rendering (no timestamps, no environment).
std::string render_text(const ReportRecord& r);
// CSV is defined for the tables record only (header k,b,a,block).
std::string render_csv(const ReportRecord& r);

// Parses a cstar index-set spec: comma-separated entries, each "a" or
// "a..b" (inclusive). "" is the empty set. Duplicates are rejected.
std::vector<std::uint64_t> parse_index_set(const std::string& spec);

}  // namespace psu
