#pragma once

// Normal forms of epimorphisms, one list of clauses per case.
//
// s + t > 0:
//   a = 0; b nondecreasing units in [1, (p^2-1)/2]; c = 0; d likewise;
//   e in {p, ..., (p-1)/2 p}, f in [0, p-1], (e, f) pairs nondecreasing;
//   g nondecreasing in {p, ..., (p-1)/2 p}.
// s = t = 0, r > 0, some f a unit:
//   a = 0; pair 1 has f_1 in [1, p-1]; pairs 2..m nondecreasing; g as above.
// s = t = 0, r > 0, no f a unit:
//   a_1 a unit in [1, (p^2-1)/2], a_2.. = 0; f = 0; e nondecreasing; g as above.
// r = s = t = 0:
//   the first r > 0 list without a.
//
// The enumerator and canonical_violations() are written independently; the
// tests check one against the other by exhaustive filtering.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclic_actions/big_count.hpp"
#include "cyclic_actions/verification/state.hpp"

namespace cyclic_actions {

namespace detail {

using Fragment = std::vector<std::uint32_t>;

inline void check_budget(std::uint64_t count, std::uint64_t budget, const char* what) {
  if (count > budget)
    throw ResourceError(std::string(what) + " exceeded state budget of " + std::to_string(budget),
                        count);
}

/// Nondecreasing sequences of `length` items, each item a fragment of
/// `items` (which must be sorted lexicographically), flattened, in lex order.
inline std::vector<Fragment> nondecreasing_sequences(const std::vector<Fragment>& items,
                                                     std::size_t length, std::uint64_t budget) {
  std::vector<Fragment> out;
  if (length == 0) {
    out.emplace_back();
    return out;
  }
  if (items.empty()) return out;
  std::vector<std::size_t> idx(length, 0);
  while (true) {
    Fragment frag;
    for (std::size_t i : idx) frag.insert(frag.end(), items[i].begin(), items[i].end());
    out.push_back(std::move(frag));
    check_budget(out.size(), budget, "canonical enumeration");
    std::size_t pos = length;
    while (pos > 0 && idx[pos - 1] + 1 == items.size()) --pos;
    if (pos == 0) break;
    const std::size_t next = idx[pos - 1] + 1;
    for (std::size_t i = pos - 1; i < length; ++i) idx[i] = next;
  }
  return out;
}

inline std::vector<Fragment> singletons(const std::vector<std::uint32_t>& values) {
  std::vector<Fragment> out;
  for (auto x : values) out.push_back({x});
  return out;
}

struct CanonicalRanges {
  std::vector<std::uint32_t> low_units;     // units in [1, (p^2-1)/2]
  std::vector<std::uint32_t> low_order_p;   // {p, ..., (p-1)/2 p}
  std::vector<Fragment> ef_pairs;           // (e, f), e low order-p, f in [0, p-1]
  std::vector<Fragment> ef_unit_pairs;      // same with f in [1, p-1]
  std::vector<Fragment> ef_zero_pairs;      // (e, 0)

  explicit CanonicalRanges(const OddPrime& p) {
    const std::uint64_t half = (p.squared() - 1) / 2;
    for (std::uint64_t x = 1; x <= half; ++x) {
      const auto kind = classify_residue(p, x);
      if (kind == ResidueKind::kUnit) low_units.push_back(static_cast<std::uint32_t>(x));
      if (kind == ResidueKind::kOrderP) low_order_p.push_back(static_cast<std::uint32_t>(x));
    }
    for (auto e : low_order_p) {
      ef_zero_pairs.push_back({e, 0});
      for (std::uint32_t f = 0; f < p.value(); ++f) {
        ef_pairs.push_back({e, f});
        if (f > 0) ef_unit_pairs.push_back({e, f});
      }
    }
  }
};

/// Cartesian product of per-class fragment lists, concatenated in order.
inline void emit_product(const Tuple5& v, const std::vector<std::vector<Fragment>>& parts,
                         std::uint64_t budget, std::uint64_t& emitted,
                         const std::function<void(const EpimorphismState&)>& visit) {
  for (const auto& part : parts)
    if (part.empty()) return;
  std::vector<std::size_t> idx(parts.size(), 0);
  while (true) {
    std::vector<std::uint32_t> coords;
    for (std::size_t i = 0; i < parts.size(); ++i)
      coords.insert(coords.end(), parts[i][idx[i]].begin(), parts[i][idx[i]].end());
    check_budget(++emitted, budget, "canonical enumeration");
    visit(EpimorphismState(v, std::move(coords)));
    std::size_t pos = parts.size();
    while (pos > 0) {
      if (++idx[pos - 1] < parts[pos - 1].size()) break;
      idx[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) break;
  }
}

}  // namespace detail

/// Visits every canonical state of v in lexicographic order.
/// Returns the number of states visited.
inline std::uint64_t for_each_canonical(const OddPrime& p, const Tuple5& v, std::uint64_t budget,
                                        const std::function<void(const EpimorphismState&)>& visit) {
  using detail::Fragment;
  const CaseTag tag = classify(v);
  const detail::CanonicalRanges ranges(p);
  const auto b_list = detail::singletons(ranges.low_units);
  const auto g_list = detail::singletons(ranges.low_order_p);

  auto zeros = [](std::size_t n) { return std::vector<Fragment>{Fragment(n, 0)}; };
  auto bc_part = [&] {
    auto bs = detail::nondecreasing_sequences(b_list, v.s, budget);
    for (auto& frag : bs) {
      Fragment with_c;
      for (auto b : frag) {
        with_c.push_back(b);
        with_c.push_back(0);
      }
      frag = std::move(with_c);
    }
    return bs;
  };
  auto g_part = [&] { return detail::nondecreasing_sequences(g_list, v.n, budget); };

  // Pair 1 pinned with f_1 a unit, pairs 2..m nondecreasing.
  auto ef_unit_first = [&] {
    std::vector<Fragment> out;
    if (v.m == 0) return out;
    const auto tails = detail::nondecreasing_sequences(ranges.ef_pairs, v.m - 1, budget);
    for (const auto& head : ranges.ef_unit_pairs)
      for (const auto& tail : tails) {
        Fragment frag = head;
        frag.insert(frag.end(), tail.begin(), tail.end());
        out.push_back(std::move(frag));
        detail::check_budget(out.size(), budget, "canonical enumeration");
      }
    return out;
  };

  std::uint64_t emitted = 0;
  switch (tag) {
    case CaseTag::kCaseST:
      detail::emit_product(v,
                           {zeros(v.r), bc_part(), detail::nondecreasing_sequences(b_list, v.t, budget),
                            detail::nondecreasing_sequences(ranges.ef_pairs, v.m, budget), g_part()},
                           budget, emitted, visit);
      break;
    case CaseTag::kCaseR: {
      const auto gs = g_part();
      detail::emit_product(v, {zeros(v.r), ef_unit_first(), gs}, budget, emitted, visit);
      std::vector<Fragment> a_frags;
      for (auto x : ranges.low_units) {
        Fragment frag(v.r, 0);
        frag[0] = x;
        a_frags.push_back(std::move(frag));
      }
      detail::emit_product(v,
                           {a_frags, detail::nondecreasing_sequences(ranges.ef_zero_pairs, v.m, budget), gs},
                           budget, emitted, visit);
      break;
    }
    case CaseTag::kCaseM:
      detail::emit_product(v, {ef_unit_first(), g_part()}, budget, emitted, visit);
      break;
  }
  return emitted;
}

inline std::vector<EpimorphismState> enumerate_canonical(const OddPrime& p, const Tuple5& v,
                                                         std::uint64_t budget = 10'000'000) {
  std::vector<EpimorphismState> out;
  for_each_canonical(p, v, budget, [&](const EpimorphismState& s) { out.push_back(s); });
  return out;
}

inline BigCount canonical_count(const OddPrime& p, const Tuple5& v, std::uint64_t budget = 10'000'000) {
  return big(for_each_canonical(p, v, budget, [](const EpimorphismState&) {}));
}

/// Names of the normal-form clauses `state` violates; empty iff canonical.
inline std::vector<std::string> canonical_violations(const OddPrime& p, const Tuple5& v,
                                                     const EpimorphismState& state) {
  std::vector<std::string> bad;
  if (state.tuple() != v) throw std::invalid_argument("state dimensions do not match tuple");
  const std::uint64_t q = p.squared();
  const std::uint64_t pp = p.value();
  auto low_unit = [&](std::uint64_t x) { return x >= 1 && x <= (q - 1) / 2 && x % pp != 0; };
  auto low_order_p = [&](std::uint64_t x) { return x >= pp && x <= (pp - 1) / 2 * pp && x % pp == 0; };
  auto pair_less = [&](std::size_t l1, std::size_t l2) {
    return std::pair{state.e(l1), state.f(l1)} <= std::pair{state.e(l2), state.f(l2)};
  };

  const CaseTag tag = classify(v);
  // Second r > 0 list: a_1 carries the unit.
  const bool unit_a = tag == CaseTag::kCaseR && v.r > 0 && state.a(0) != 0;

  for (std::size_t i = 0; i < v.r; ++i) {
    if (unit_a && i == 0) {
      if (!low_unit(state.a(0))) bad.push_back("a1 unit in [1,(p^2-1)/2]");
    } else if (state.a(i) != 0) {
      bad.push_back("a" + std::to_string(i + 1) + " = 0");
    }
  }
  for (std::size_t j = 0; j < v.s; ++j) {
    if (!low_unit(state.b(j))) bad.push_back("b" + std::to_string(j + 1) + " unit in range");
    if (j > 0 && state.b(j - 1) > state.b(j)) bad.push_back("b nondecreasing");
    if (state.c(j) != 0) bad.push_back("c" + std::to_string(j + 1) + " = 0");
  }
  for (std::size_t k = 0; k < v.t; ++k) {
    if (!low_unit(state.d(k))) bad.push_back("d" + std::to_string(k + 1) + " unit in range");
    if (k > 0 && state.d(k - 1) > state.d(k)) bad.push_back("d nondecreasing");
  }
  for (std::size_t l = 0; l < v.m; ++l) {
    if (!low_order_p(state.e(l))) bad.push_back("e" + std::to_string(l + 1) + " order p in range");
    if (state.f(l) >= pp) bad.push_back("f" + std::to_string(l + 1) + " in [0,p-1]");
  }
  switch (tag) {
    case CaseTag::kCaseST:
      for (std::size_t l = 1; l < v.m; ++l)
        if (!pair_less(l - 1, l)) bad.push_back("(e,f) pairs nondecreasing");
      break;
    case CaseTag::kCaseR:
    case CaseTag::kCaseM:
      if (unit_a) {
        for (std::size_t l = 0; l < v.m; ++l)
          if (state.f(l) != 0) bad.push_back("f" + std::to_string(l + 1) + " = 0");
        for (std::size_t l = 1; l < v.m; ++l)
          if (!pair_less(l - 1, l)) bad.push_back("e nondecreasing");
      } else {
        if (v.m == 0) {
          bad.push_back("some generator maps to a unit");
        } else if (state.f(0) == 0) {
          bad.push_back("f1 in [1,p-1]");
        }
        for (std::size_t l = 2; l < v.m; ++l)
          if (!pair_less(l - 1, l)) bad.push_back("(e,f) pairs 2..m nondecreasing");
      }
      break;
  }
  for (std::size_t k = 0; k < v.n; ++k) {
    if (!low_order_p(state.g(k))) bad.push_back("g" + std::to_string(k + 1) + " order p in range");
    if (k > 0 && state.g(k - 1) > state.g(k)) bad.push_back("g nondecreasing");
  }
  return bad;
}

}  // namespace cyclic_actions
