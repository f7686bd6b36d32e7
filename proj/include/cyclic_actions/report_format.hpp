#pragma once

// Rendering of reports as table, JSON or CSV. Counts are decimal strings in
// JSON so no precision is lost in any consumer.

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cyclic_actions/theorem_counts.hpp"
#include "cyclic_actions/verification/compare.hpp"

namespace cyclic_actions {

enum class OutputFormat { kTable, kJson, kCsv };

inline OutputFormat parse_format(std::string_view s) {
  if (s == "table") return OutputFormat::kTable;
  if (s == "json") return OutputFormat::kJson;
  if (s == "csv") return OutputFormat::kCsv;
  throw std::invalid_argument("unknown format '" + std::string(s) + "'");
}

inline std::string tuple_field(const Tuple5& v) {
  std::ostringstream os;
  os << v.r << ',' << v.s << ',' << v.t << ',' << v.m << ',' << v.n;
  return os.str();
}

inline CaseTag parse_case(std::string_view s) {
  if (s == "CASE_ST") return CaseTag::kCaseST;
  if (s == "CASE_R") return CaseTag::kCaseR;
  if (s == "CASE_M") return CaseTag::kCaseM;
  throw std::invalid_argument("unknown case tag '" + std::string(s) + "'");
}

// ---- flags -----------------------------------------------------------------

inline nlohmann::ordered_json flag_to_json(const DiscrepancyFlag& f) {
  return {{"location", f.location},
          {"paper_value", to_decimal(f.paper_value)},
          {"computed_value", to_decimal(f.computed_value)}};
}

inline DiscrepancyFlag flag_from_json(const nlohmann::json& j) {
  return {j.at("location").get<std::string>(), from_decimal(j.at("paper_value").get<std::string>()),
          from_decimal(j.at("computed_value").get<std::string>())};
}

inline std::string flags_field(const std::vector<DiscrepancyFlag>& flags) {
  std::string out;
  for (const auto& f : flags) {
    if (!out.empty()) out += ';';
    out += "reference=" + to_decimal(f.paper_value) + " computed=" + to_decimal(f.computed_value);
  }
  return out;
}

// ---- census ----------------------------------------------------------------

inline nlohmann::ordered_json census_to_json(const CountReport& rep) {
  nlohmann::ordered_json j;
  j["p"] = rep.p;
  j["g"] = rep.g;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rep.rows) {
    nlohmann::ordered_json flags = nlohmann::ordered_json::array();
    for (const auto& f : row.flags) flags.push_back(flag_to_json(f));
    j["rows"].push_back({{"tuple", tuple_field(row.tuple)},
                         {"case", std::string(case_name(row.case_tag))},
                         {"count", to_decimal(row.count)},
                         {"flags", flags}});
  }
  j["total"] = to_decimal(rep.total);
  if (rep.paper_reference_total) j["reference_total"] = to_decimal(*rep.paper_reference_total);
  j["flags"] = nlohmann::ordered_json::array();
  for (const auto& f : rep.flags()) j["flags"].push_back(flag_to_json(f));
  return j;
}

inline CountReport census_from_json(const nlohmann::json& j) {
  CountReport rep;
  rep.p = j.at("p").get<std::uint64_t>();
  rep.g = j.at("g").get<std::uint64_t>();
  for (const auto& row : j.at("rows")) {
    TupleCount tc;
    tc.tuple = Tuple5::parse(row.at("tuple").get<std::string>());
    tc.case_tag = parse_case(row.at("case").get<std::string>());
    tc.count = from_decimal(row.at("count").get<std::string>());
    for (const auto& f : row.at("flags")) tc.flags.push_back(flag_from_json(f));
    rep.rows.push_back(std::move(tc));
  }
  rep.total = from_decimal(j.at("total").get<std::string>());
  if (j.contains("reference_total"))
    rep.paper_reference_total = from_decimal(j.at("reference_total").get<std::string>());
  return rep;
}

/// Fixed columns r,s,t,m,n,case,count,flags; the last row carries the total.
inline std::string census_to_csv(const CountReport& rep, bool header = true) {
  std::ostringstream os;
  if (header) os << "r,s,t,m,n,case,count,flags\n";
  for (const auto& row : rep.rows)
    os << tuple_field(row.tuple) << ',' << case_name(row.case_tag) << ',' << to_decimal(row.count) << ','
       << flags_field(row.flags) << '\n';
  os << ",,,,,TOTAL," << to_decimal(rep.total) << ',';
  if (rep.paper_reference_total) os << "reference=" << to_decimal(*rep.paper_reference_total);
  os << '\n';
  return os.str();
}

inline std::string census_to_table(const CountReport& rep, bool per_tuple, bool header = true) {
  std::ostringstream os;
  if (header) os << "p=" << rep.p << " g=" << rep.g << " tuples=" << rep.rows.size() << '\n';
  if (per_tuple) {
    for (const auto& row : rep.rows) {
      os << "  " << row.tuple << "  " << case_name(row.case_tag) << "  " << to_decimal(row.count);
      for (const auto& f : row.flags) os << "  [reference " << to_decimal(f.paper_value) << "]";
      os << '\n';
    }
  }
  os << "total " << to_decimal(rep.total);
  if (rep.paper_reference_total) os << " (reference " << to_decimal(*rep.paper_reference_total) << ")";
  os << '\n';
  const auto flags = rep.flags();
  if (!flags.empty()) os << flags.size() << " discrepancy flag(s)\n";
  return os.str();
}

// ---- comparisons -----------------------------------------------------------

inline nlohmann::ordered_json optional_count(const std::optional<BigCount>& c) {
  return c ? nlohmann::ordered_json(to_decimal(*c)) : nlohmann::ordered_json(nullptr);
}

inline nlohmann::ordered_json optional_bool(std::optional<bool> b) {
  return b ? nlohmann::ordered_json(*b) : nlohmann::ordered_json(nullptr);
}

inline nlohmann::ordered_json comparison_to_json(const ComparisonReport& rep) {
  nlohmann::ordered_json j;
  j["tuple"] = tuple_field(rep.tuple);
  j["case"] = std::string(case_name(rep.case_tag));
  j["theorem_count"] = to_decimal(rep.theorem_count);
  j["canonical_count"] = optional_count(rep.canonical_count);
  j["orbit_count"] = optional_count(rep.orbit_count);
  j["state_space_size"] = rep.state_space_size;
  j["valid_states"] = rep.valid_states;
  j["largest_orbit"] = rep.largest_orbit;
  j["agreement"] = {{"theorem_canonical", optional_bool(rep.theorem_matches_canonical())},
                    {"theorem_orbit", optional_bool(rep.theorem_matches_orbits())},
                    {"canonical_orbit", optional_bool(rep.canonical_matches_orbits())}};
  j["complete"] = rep.complete;
  if (!rep.complete) j["incomplete_reason"] = rep.incomplete_reason;
  return j;
}

inline ComparisonReport comparison_from_json(std::uint64_t p, const nlohmann::json& j) {
  ComparisonReport rep;
  rep.p = p;
  rep.tuple = Tuple5::parse(j.at("tuple").get<std::string>());
  rep.case_tag = parse_case(j.at("case").get<std::string>());
  rep.theorem_count = from_decimal(j.at("theorem_count").get<std::string>());
  if (!j.at("canonical_count").is_null())
    rep.canonical_count = from_decimal(j.at("canonical_count").get<std::string>());
  if (!j.at("orbit_count").is_null()) rep.orbit_count = from_decimal(j.at("orbit_count").get<std::string>());
  rep.state_space_size = j.at("state_space_size").get<std::uint64_t>();
  rep.valid_states = j.at("valid_states").get<std::uint64_t>();
  rep.largest_orbit = j.at("largest_orbit").get<std::uint64_t>();
  rep.complete = j.at("complete").get<bool>();
  if (j.contains("incomplete_reason")) rep.incomplete_reason = j.at("incomplete_reason").get<std::string>();
  return rep;
}

/// Formula/orbit disagreements as flags, for the verify report.
inline std::vector<DiscrepancyFlag> comparison_flags(const ComparisonReport& rep) {
  std::vector<DiscrepancyFlag> out;
  if (rep.canonical_count && *rep.canonical_count != rep.theorem_count)
    out.push_back({"normal-form count, tuple " + rep.tuple.to_string(), rep.theorem_count,
                   *rep.canonical_count});
  if (rep.orbit_count && *rep.orbit_count != rep.theorem_count)
    out.push_back({"orbit count, tuple " + rep.tuple.to_string(), rep.theorem_count, *rep.orbit_count});
  return out;
}

/// Verify report: `scope` is {"g": ...} or {"tuple": ...}. `total` sums the formula counts.
inline nlohmann::ordered_json verify_to_json(std::uint64_t p, const nlohmann::ordered_json& scope,
                                             const std::vector<ComparisonReport>& reports) {
  nlohmann::ordered_json j;
  j["p"] = p;
  for (const auto& [key, value] : scope.items()) j[key] = value;
  j["rows"] = nlohmann::ordered_json::array();
  BigCount total = 0;
  bool complete = true;
  std::vector<DiscrepancyFlag> flags;
  for (const auto& rep : reports) {
    j["rows"].push_back(comparison_to_json(rep));
    for (auto& f : comparison_flags(rep)) flags.push_back(std::move(f));
    total += rep.theorem_count;
    complete = complete && rep.complete;
  }
  j["total"] = to_decimal(total);
  j["flags"] = nlohmann::ordered_json::array();
  for (const auto& f : flags) j["flags"].push_back(flag_to_json(f));
  j["complete"] = complete;
  return j;
}

inline std::string show(const std::optional<BigCount>& c) { return c ? to_decimal(*c) : "-"; }

inline std::string verify_to_csv(const std::vector<ComparisonReport>& reports, bool header = true) {
  std::ostringstream os;
  if (header)
    os << "r,s,t,m,n,case,theorem_count,canonical_count,orbit_count,state_space_size,valid_states,"
          "largest_orbit,complete\n";
  for (const auto& rep : reports)
    os << tuple_field(rep.tuple) << ',' << case_name(rep.case_tag) << ',' << to_decimal(rep.theorem_count)
       << ',' << (rep.canonical_count ? to_decimal(*rep.canonical_count) : "") << ','
       << (rep.orbit_count ? to_decimal(*rep.orbit_count) : "") << ',' << rep.state_space_size << ','
       << rep.valid_states << ',' << rep.largest_orbit << ',' << (rep.complete ? "true" : "false") << '\n';
  return os.str();
}

inline std::string verify_to_table(std::uint64_t p, const std::vector<ComparisonReport>& reports,
                                   bool header = true) {
  std::ostringstream os;
  if (header) os << "p=" << p << "  tuple  case  theorem / canonical / orbit  states\n";
  for (const auto& rep : reports) {
    os << "  " << rep.tuple << "  " << case_name(rep.case_tag) << "  " << to_decimal(rep.theorem_count)
       << " / " << show(rep.canonical_count) << " / " << show(rep.orbit_count) << "  "
       << rep.state_space_size;
    if (!rep.complete)
      os << "  INCOMPLETE: " << rep.incomplete_reason;
    else
      os << (rep.all_agree() ? "  agree" : "  DISAGREE");
    os << '\n';
  }
  return os.str();
}

}  // namespace cyclic_actions
