#pragma once

// Closed-form class counts per tuple, and the census over all tuples of a
// given genus.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclic_actions/big_count.hpp"
#include "cyclic_actions/counting.hpp"
#include "cyclic_actions/tuples.hpp"

namespace cyclic_actions {

/// A published value that disagrees with the formula evaluation.
struct DiscrepancyFlag {
  std::string location;
  BigCount paper_value;
  BigCount computed_value;

  friend bool operator==(const DiscrepancyFlag&, const DiscrepancyFlag&) = default;
};

struct TupleCount {
  Tuple5 tuple;
  CaseTag case_tag = CaseTag::kCaseST;
  BigCount count;
  std::vector<DiscrepancyFlag> flags;

  friend bool operator==(const TupleCount&, const TupleCount&) = default;
};

struct CountReport {
  std::uint64_t p = 0;
  std::uint64_t g = 0;
  std::vector<TupleCount> rows;
  BigCount total;
  std::optional<BigCount> paper_reference_total;

  /// All row flags, in row order.
  std::vector<DiscrepancyFlag> flags() const {
    std::vector<DiscrepancyFlag> out;
    for (const auto& row : rows) out.insert(out.end(), row.flags.begin(), row.flags.end());
    return out;
  }

  friend bool operator==(const CountReport&, const CountReport&) = default;
};

namespace detail {

inline void require_case(const Tuple5& v, CaseTag expected) {
  if (classify(v) != expected)
    throw std::invalid_argument("tuple " + v.to_string() + " is " +
                                std::string(case_name(classify(v))) + ", not " +
                                std::string(case_name(expected)));
}

// (p-1)^2/2 and p(p-1)/2 must be exact for odd p.
inline void check_halves(const OddPrime& p) {
  const std::uint64_t v = p.value();
  if ((v - 1) * (v - 1) % 2 != 0 || v * (v - 1) % 2 != 0)
    throw std::logic_error("half-counts are not integral for p=" + std::to_string(v));
}

}  // namespace detail

/// s + t > 0:  A(p(p-1)/2, s) A(p(p-1)/2, t) A(p(p-1)/2, m) A((p-1)/2, n).
inline BigCount count_case_st(const OddPrime& p, const Tuple5& v) {
  detail::require_case(v, CaseTag::kCaseST);
  detail::check_halves(p);
  const auto units = p.half_units();
  return count_A(units, v.s) * count_A(units, v.t) * count_A(units, v.m) *
         count_A(p.half_order_p(), v.n);
}

/// s = t = 0, r > 0:
///   (p-1)^2/2 A(p(p-1)/2, m-1) A((p-1)/2, n) + p(p-1)/2 A((p-1)/2, m) A((p-1)/2, n).
/// The first summand counts classes with some f mapped to a unit, so it is 0
/// when m = 0.
inline BigCount count_case_r(const OddPrime& p, const Tuple5& v) {
  detail::require_case(v, CaseTag::kCaseR);
  detail::check_halves(p);
  const BigCount g_part = count_A(p.half_order_p(), v.n);
  BigCount unit_f = 0;
  if (v.m > 0) unit_f = big(p.half_unit_pairs()) * count_A(p.half_units(), v.m - 1) * g_part;
  const BigCount unit_a = big(p.half_units()) * count_A(p.half_order_p(), v.m) * g_part;
  return unit_f + unit_a;
}

/// r = s = t = 0, m > 0:  (p-1)^2/2 A(p(p-1)/2, m-1) A((p-1)/2, n).
inline BigCount count_case_m(const OddPrime& p, const Tuple5& v) {
  detail::require_case(v, CaseTag::kCaseM);
  detail::check_halves(p);
  return big(p.half_unit_pairs()) * count_A(p.half_units(), v.m - 1) *
         count_A(p.half_order_p(), v.n);
}

inline BigCount theorem_count(const OddPrime& p, const Tuple5& v) {
  switch (classify(v)) {
    case CaseTag::kCaseST: return count_case_st(p, v);
    case CaseTag::kCaseR: return count_case_r(p, v);
    case CaseTag::kCaseM: return count_case_m(p, v);
  }
  throw std::logic_error("unreachable case tag");
}

/// Published per-tuple values for a census, used only to annotate reports.
struct ReferenceCensus {
  std::uint64_t p;
  std::uint64_t g;
  std::vector<std::pair<Tuple5, std::uint64_t>> rows;
  std::uint64_t total;
};

/// Censuses tabulated in the literature this library audits. The only one is
/// Z_25 acting on genus 26; its listed row values sum to its listed total.
inline const std::vector<ReferenceCensus>& reference_censuses() {
  static const std::vector<ReferenceCensus> kTables = {
      {5, 26,
       {{{0, 2, 0, 0, 0}, 55},
        {{2, 0, 0, 0, 0}, 10},
        {{0, 0, 0, 2, 0}, 55},
        {{1, 1, 0, 0, 0}, 10},
        {{1, 0, 0, 1, 0}, 18},
        {{0, 1, 0, 1, 0}, 100}},
       248},
  };
  return kTables;
}

inline const ReferenceCensus* find_reference(std::uint64_t p, std::uint64_t g) {
  for (const auto& table : reference_censuses())
    if (table.p == p && table.g == g) return &table;
  return nullptr;
}

inline CountReport census(const OddPrime& p, const Genus& g) {
  CountReport report;
  report.p = p.value();
  report.g = g.value();
  report.total = 0;
  const ReferenceCensus* ref = find_reference(p.value(), g.value());

  for (const Tuple5& v : admissible_tuples(p, g)) {
    TupleCount row{v, classify(v), theorem_count(p, v), {}};
    if (ref) {
      auto it = std::find_if(ref->rows.begin(), ref->rows.end(),
                             [&](const auto& entry) { return entry.first == v; });
      if (it != ref->rows.end() && big(it->second) != row.count) {
        row.flags.push_back({"reference census p=" + std::to_string(ref->p) +
                                 " g=" + std::to_string(ref->g) + " tuple " + v.to_string(),
                             big(it->second), row.count});
      }
    }
    report.total += row.count;
    report.rows.push_back(std::move(row));
  }
  if (ref) report.paper_reference_total = big(ref->total);
  return report;
}

}  // namespace cyclic_actions
