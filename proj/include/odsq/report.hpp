#pragma once

// Machine-readable report records and their JSON form. Field names are
// stable; integers render in plain decimal.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "odsq/ascending.hpp"

namespace odsq {

/// One differential comparison of a closed form against the oracle over
/// indices 0..checked-1. Values and location are those of the first
/// mismatch, or of the last index when everything agreed.
struct ReportRow {
  std::string quantity;  // "3", "p:7", "kl", "kkl", "kpow:2", "w"
  std::string variant;   // "corrected", "paper", "closed-form", "paper_eq6"
  std::string location_kind = "n";
  std::uint64_t location = 0;
  std::int64_t paper_value = 0;  // closed-form value
  std::int64_t oracle_value = 0;
  std::int64_t delta = 0;  // paper_value - oracle_value
  std::uint64_t checked = 0;
  std::uint64_t mismatches = 0;
  bool gating = true;  // a mismatch in a gating row fails verification

  /// "OK", "WARN" (informational mismatch) or "FAIL".
  std::string status() const;
  bool operator==(const ReportRow&) const = default;
};

struct VerifyReport {
  std::uint64_t max_n = 0;
  std::vector<ReportRow> rows;

  bool passed() const;
  bool has_warnings() const;
  bool operator==(const VerifyReport&) const = default;
};

struct BenchRow {
  std::string name;
  std::uint64_t x_max = 0;
  std::uint64_t repeats = 0;
  std::uint64_t median_ns = 0;
  std::int64_t result = 0;  // value computed, so runs are comparable

  bool operator==(const BenchRow&) const = default;
};

void to_json(nlohmann::json& j, const PiBreakdown& b);
void from_json(const nlohmann::json& j, PiBreakdown& b);
void to_json(nlohmann::json& j, const ReportRow& r);
void from_json(const nlohmann::json& j, ReportRow& r);
void to_json(nlohmann::json& j, const VerifyReport& r);
void from_json(const nlohmann::json& j, VerifyReport& r);
void to_json(nlohmann::json& j, const BenchRow& r);
void from_json(const nlohmann::json& j, BenchRow& r);

/// Integral x renders as an integer, anything else as a float.
nlohmann::json number_json(double x);

}  // namespace odsq
