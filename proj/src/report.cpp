#include "odsq/report.hpp"

#include <algorithm>
#include <cmath>

namespace odsq {

std::string ReportRow::status() const {
  if (mismatches == 0) return "OK";
  return gating ? "FAIL" : "WARN";
}

bool VerifyReport::passed() const {
  return std::ranges::none_of(rows, [](const ReportRow& r) { return r.gating && r.mismatches > 0; });
}

bool VerifyReport::has_warnings() const {
  return std::ranges::any_of(rows, [](const ReportRow& r) { return !r.gating && r.mismatches > 0; });
}

nlohmann::json number_json(double x) {
  if (std::floor(x) == x && std::fabs(x) < 9007199254740992.0) {
    return x < 0 ? nlohmann::json(static_cast<std::int64_t>(x)) : nlohmann::json(static_cast<std::uint64_t>(x));
  }
  return x;
}

void to_json(nlohmann::json& j, const PiBreakdown& b) {
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [pattern, count] : b.class_counts) counts[pattern.to_string()] = count;
  j = nlohmann::json{
      {"x", number_json(b.x)},
      {"n", b.n ? nlohmann::json(b.n->value) : nlohmann::json(nullptr)},
      {"m_n", b.m_n},
      {"w_n", b.w_n},
      {"m", b.m_corr},
      {"pi", b.pi},
      {"strategy", std::string(to_string(b.strategy))},
      {"class_counts", counts},
  };
}

void from_json(const nlohmann::json& j, PiBreakdown& b) {
  b.x = j.at("x").get<double>();
  const auto& n = j.at("n");
  b.n = n.is_null() ? std::nullopt : std::optional<SequenceIndex>(SequenceIndex{n.get<std::uint64_t>()});
  b.m_n = j.at("m_n").get<std::uint64_t>();
  b.w_n = j.at("w_n").get<std::int64_t>();
  b.m_corr = j.at("m").get<std::int64_t>();
  b.pi = j.at("pi").get<std::int64_t>();
  b.strategy = parse_strategy(j.at("strategy").get<std::string>());
  b.class_counts.clear();
  for (const auto& [key, value] : j.at("class_counts").items()) {
    b.class_counts[CompositePattern::parse(key)] = value.get<std::uint64_t>();
  }
}

void to_json(nlohmann::json& j, const ReportRow& r) {
  j = nlohmann::json{
      {"quantity", r.quantity},
      {"variant", r.variant},
      {"location_kind", r.location_kind},
      {"location", r.location},
      {"paper", r.paper_value},
      {"oracle", r.oracle_value},
      {"delta", r.delta},
      {"checked", r.checked},
      {"mismatches", r.mismatches},
      {"gating", r.gating},
      {"status", r.status()},
  };
}

void from_json(const nlohmann::json& j, ReportRow& r) {
  j.at("quantity").get_to(r.quantity);
  j.at("variant").get_to(r.variant);
  j.at("location_kind").get_to(r.location_kind);
  j.at("location").get_to(r.location);
  j.at("paper").get_to(r.paper_value);
  j.at("oracle").get_to(r.oracle_value);
  j.at("delta").get_to(r.delta);
  j.at("checked").get_to(r.checked);
  j.at("mismatches").get_to(r.mismatches);
  j.at("gating").get_to(r.gating);
}

void to_json(nlohmann::json& j, const VerifyReport& r) {
  j = nlohmann::json{
      {"max_n", r.max_n},
      {"passed", r.passed()},
      {"rows", r.rows},
  };
}

void from_json(const nlohmann::json& j, VerifyReport& r) {
  j.at("max_n").get_to(r.max_n);
  j.at("rows").get_to(r.rows);
}

void to_json(nlohmann::json& j, const BenchRow& r) {
  j = nlohmann::json{
      {"name", r.name}, {"x_max", r.x_max}, {"repeats", r.repeats}, {"median_ns", r.median_ns}, {"result", r.result},
  };
}

void from_json(const nlohmann::json& j, BenchRow& r) {
  j.at("name").get_to(r.name);
  j.at("x_max").get_to(r.x_max);
  j.at("repeats").get_to(r.repeats);
  j.at("median_ns").get_to(r.median_ns);
  j.at("result").get_to(r.result);
}

}  // namespace odsq
