#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cyclic_actions/big_count.hpp"
#include "cyclic_actions/theorem_counts.hpp"
#include "cyclic_actions/verification/canonical.hpp"
#include "cyclic_actions/verification/orbits.hpp"

namespace cyclic_actions {

/// Formula count, normal-form count and orbit count for one tuple.
/// Disagreement is recorded, never raised.
struct ComparisonReport {
  std::uint64_t p = 0;
  Tuple5 tuple;
  CaseTag case_tag = CaseTag::kCaseST;
  BigCount theorem_count;
  std::optional<BigCount> canonical_count;
  std::optional<BigCount> orbit_count;
  /// Size of the enumerated state space (product of coordinate domains).
  std::uint64_t state_space_size = 0;
  std::uint64_t valid_states = 0;
  std::uint64_t largest_orbit = 0;
  /// Set when a budget stopped one of the enumerations.
  bool complete = true;
  std::string incomplete_reason;

  std::optional<bool> theorem_matches_canonical() const {
    if (!canonical_count) return std::nullopt;
    return theorem_count == *canonical_count;
  }
  std::optional<bool> theorem_matches_orbits() const {
    if (!orbit_count) return std::nullopt;
    return theorem_count == *orbit_count;
  }
  std::optional<bool> canonical_matches_orbits() const {
    if (!orbit_count || !canonical_count) return std::nullopt;
    return *canonical_count == *orbit_count;
  }
  bool all_agree() const {
    return theorem_matches_canonical().value_or(false) && theorem_matches_orbits().value_or(false);
  }

  friend bool operator==(const ComparisonReport&, const ComparisonReport&) = default;
};

inline ComparisonReport compare(const OddPrime& p, const Tuple5& v, const OrbitOptions& opts = {}) {
  ComparisonReport rep;
  rep.p = p.value();
  rep.tuple = v;
  rep.case_tag = classify(v);
  rep.theorem_count = theorem_count(p, v);
  rep.state_space_size = DenseIndexer::state_space_size(p, v);

  try {
    rep.canonical_count = canonical_count(p, v, opts.budget);
  } catch (const ResourceError& e) {
    rep.complete = false;
    rep.incomplete_reason = e.what();
  }
  try {
    const OrbitPartition part = orbit_partition(p, v, opts);
    rep.orbit_count = big(part.orbits);
    rep.valid_states = part.valid_states;
    rep.largest_orbit = part.largest_orbit;
  } catch (const ResourceError& e) {
    if (rep.complete) rep.incomplete_reason = e.what();
    rep.complete = false;
  }
  return rep;
}

}  // namespace cyclic_actions
