#pragma once

// Orbit counting by exhaustive search over every state whose coordinates lie
// in their domains (b, d units; e, g of order p; a, c, f arbitrary).
//
// States are addressed by a dense mixed-radix index whose order matches the
// lexicographic order of coordinates, so the smallest index in an orbit is
// also its smallest base-p^2 encoding.

#include <algorithm>
#include <exception>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "cyclic_actions/big_count.hpp"
#include "cyclic_actions/union_find.hpp"
#include "cyclic_actions/verification/moves.hpp"
#include "cyclic_actions/verification/state.hpp"

namespace cyclic_actions {

class DenseIndexer {
 public:
  /// Throws ResourceError if the state space exceeds `budget`.
  DenseIndexer(const OddPrime& p, const Tuple5& v, std::uint64_t budget)
      : p_(p), layout_(v) {
    for (auto dom : {CoordinateDomain::kAll, CoordinateDomain::kUnits, CoordinateDomain::kOrderP}) {
      auto& vals = values_[static_cast<int>(dom)];
      vals = domain_values(p, dom);
      auto& inv = inverse_[static_cast<int>(dom)];
      inv.assign(p.squared(), kAbsent);
      for (std::uint32_t i = 0; i < vals.size(); ++i) inv[vals[i]] = i;
    }
    const std::size_t w = layout_.width();
    domain_.resize(w);
    stride_.assign(w, 1);
    std::uint64_t total = 1;
    bool overflow = false;
    for (std::size_t pos = w; pos-- > 0;) {
      domain_[pos] = layout_.domain_at(pos);
      stride_[pos] = total;
      const std::uint64_t radix = values_[static_cast<int>(domain_[pos])].size();
      if (total > std::numeric_limits<std::uint64_t>::max() / radix) {
        overflow = true;
        total = std::numeric_limits<std::uint64_t>::max();
      } else if (!overflow) {
        total *= radix;
      }
    }
    size_ = total;
    if (overflow || size_ > budget || size_ > kMaxStates)
      throw ResourceError("state space of " + v.to_string() + " at p=" + std::to_string(p.value()) +
                              " has " + (overflow ? std::string("> 2^64") : std::to_string(size_)) +
                              " states, budget is " + std::to_string(budget),
                          size_);
  }

  /// Product of coordinate domain sizes, without evaluating the budget.
  static std::uint64_t state_space_size(const OddPrime& p, const Tuple5& v) {
    const StateLayout layout(v);
    std::uint64_t total = 1;
    for (std::size_t pos = 0; pos < layout.width(); ++pos) {
      const std::uint64_t radix = domain_values(p, layout.domain_at(pos)).size();
      if (total > std::numeric_limits<std::uint64_t>::max() / radix)
        return std::numeric_limits<std::uint64_t>::max();
      total *= radix;
    }
    return total;
  }

  std::uint64_t size() const { return size_; }
  const StateLayout& layout() const { return layout_; }

  void decode(std::uint64_t idx, std::span<std::uint32_t> out) const {
    for (std::size_t pos = 0; pos < out.size(); ++pos) {
      const auto& vals = values_[static_cast<int>(domain_[pos])];
      out[pos] = vals[idx / stride_[pos]];
      idx %= stride_[pos];
    }
  }

  /// Dense index of coordinates, or kAbsent if some coordinate leaves its domain.
  std::uint64_t encode(std::span<const std::uint32_t> x) const {
    std::uint64_t idx = 0;
    for (std::size_t pos = 0; pos < x.size(); ++pos) {
      const std::uint32_t digit = inverse_[static_cast<int>(domain_[pos])][x[pos]];
      if (digit == kAbsent) return kAbsent;
      idx += digit * stride_[pos];
    }
    return idx;
  }

  bool generates(std::span<const std::uint32_t> x) const {
    for (std::size_t pos = 0; pos < x.size(); ++pos)
      if (layout_.can_generate(pos) && x[pos] % p_.value() != 0) return true;
    return false;
  }

  static constexpr std::uint32_t kAbsent = std::numeric_limits<std::uint32_t>::max();
  static constexpr std::uint64_t kMaxStates = std::numeric_limits<std::uint32_t>::max() - 1;

 private:
  OddPrime p_;
  StateLayout layout_;
  std::vector<std::uint32_t> values_[3];
  std::vector<std::uint32_t> inverse_[3];
  std::vector<CoordinateDomain> domain_;
  std::vector<std::uint64_t> stride_;
  std::uint64_t size_ = 0;
};

enum class OrbitMethod { kAuto, kBfs, kUnionFind };

inline std::string_view method_name(OrbitMethod m) {
  switch (m) {
    case OrbitMethod::kAuto: return "auto";
    case OrbitMethod::kBfs: return "bfs";
    case OrbitMethod::kUnionFind: return "union-find";
  }
  return "?";
}

struct OrbitOptions {
  std::uint64_t budget = 1'000'000;
  OrbitMethod method = OrbitMethod::kAuto;
  /// Worker threads for union-find edge generation. Output does not depend on it.
  unsigned workers = 1;
  MoveAlphabet alphabet = MoveAlphabet::standard();
  /// kAuto uses BFS at or below this many states, union-find above.
  std::uint64_t bfs_threshold = 100'000;
};

/// Orbit label per dense index: the smallest dense index of the orbit, or
/// kInvalid for states that are not epimorphisms.
struct OrbitPartition {
  std::vector<std::uint32_t> label;
  std::uint64_t valid_states = 0;
  std::uint64_t orbits = 0;
  std::uint64_t largest_orbit = 0;
  OrbitMethod method = OrbitMethod::kAuto;

  static constexpr std::uint32_t kInvalid = std::numeric_limits<std::uint32_t>::max();
};

namespace detail {

inline std::vector<std::uint8_t> valid_mask(const DenseIndexer& ix) {
  std::vector<std::uint8_t> valid(ix.size(), 0);
  std::vector<std::uint32_t> x(ix.layout().width());
  for (std::uint64_t i = 0; i < ix.size(); ++i) {
    ix.decode(i, x);
    valid[i] = ix.generates(x) ? 1 : 0;
  }
  return valid;
}

[[noreturn]] inline void left_valid_set(const Move& mv) {
  throw std::logic_error("move " + mv.to_string() + " left the set of valid states");
}

inline void bfs_labels(const OddPrime& p, const DenseIndexer& ix, const std::vector<std::uint8_t>& valid,
                       const std::vector<Move>& moves, std::vector<std::uint32_t>& label) {
  const std::uint64_t q = p.squared();
  std::vector<std::uint32_t> x(ix.layout().width()), y(x.size());
  std::vector<std::uint32_t> frontier;
  for (std::uint64_t start = 0; start < ix.size(); ++start) {
    if (!valid[start] || label[start] != OrbitPartition::kInvalid) continue;
    const auto root = static_cast<std::uint32_t>(start);
    label[start] = root;
    frontier.assign(1, root);
    for (std::size_t head = 0; head < frontier.size(); ++head) {
      const std::uint32_t cur = frontier[head];
      ix.decode(cur, x);
      for (const Move& mv : moves) {
        y = x;
        apply_move_unchecked(q, ix.layout(), mv, y);
        const std::uint64_t nb = ix.encode(y);
        if (nb == DenseIndexer::kAbsent || !valid[nb]) left_valid_set(mv);
        if (label[nb] == OrbitPartition::kInvalid) {
          label[nb] = root;
          frontier.push_back(static_cast<std::uint32_t>(nb));
        }
      }
    }
  }
}

inline void union_range(const OddPrime& p, const DenseIndexer& ix, const std::vector<std::uint8_t>& valid,
                        const std::vector<Move>& moves, std::uint64_t begin, std::uint64_t end,
                        UnionFind& uf) {
  const std::uint64_t q = p.squared();
  std::vector<std::uint32_t> x(ix.layout().width()), y(x.size());
  for (std::uint64_t i = begin; i < end; ++i) {
    if (!valid[i]) continue;
    ix.decode(i, x);
    for (const Move& mv : moves) {
      y = x;
      apply_move_unchecked(q, ix.layout(), mv, y);
      const std::uint64_t nb = ix.encode(y);
      if (nb == DenseIndexer::kAbsent || !valid[nb]) left_valid_set(mv);
      uf.unite(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(nb));
    }
  }
}

inline void union_find_labels(const OddPrime& p, const DenseIndexer& ix,
                              const std::vector<std::uint8_t>& valid, const std::vector<Move>& moves,
                              unsigned workers, std::vector<std::uint32_t>& label) {
  const std::uint64_t n = ix.size();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::uint64_t>(n, 1))));
  std::vector<UnionFind> partial;
  partial.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) partial.emplace_back(n);
  {
    std::vector<std::jthread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = n * w / workers;
      const std::uint64_t end = n * (w + 1) / workers;
      pool.emplace_back([&, w, begin, end] {
        try {
          union_range(p, ix, valid, moves, begin, end, partial[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    pool.clear();
    for (auto& err : errors)
      if (err) std::rethrow_exception(err);
  }
  UnionFind& merged = partial.front();
  for (unsigned w = 1; w < workers; ++w)
    for (std::uint32_t i = 0; i < n; ++i) merged.unite(i, partial[w].find(i));

  std::vector<std::uint32_t> min_of_root(n, OrbitPartition::kInvalid);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (!valid[i]) continue;
    const std::uint32_t r = merged.find(i);
    if (min_of_root[r] == OrbitPartition::kInvalid) min_of_root[r] = i;
    label[i] = min_of_root[r];
  }
}

}  // namespace detail

inline OrbitPartition orbit_partition(const OddPrime& p, const Tuple5& v, const OrbitOptions& opts = {}) {
  v.validate();
  const DenseIndexer ix(p, v, opts.budget);
  const auto valid = detail::valid_mask(ix);

  OrbitPartition part;
  part.label.assign(ix.size(), OrbitPartition::kInvalid);
  part.method = opts.method;
  if (part.method == OrbitMethod::kAuto)
    part.method = ix.size() <= opts.bfs_threshold ? OrbitMethod::kBfs : OrbitMethod::kUnionFind;

  if (part.method == OrbitMethod::kBfs)
    detail::bfs_labels(p, ix, valid, full_moves(p, ix.layout(), opts.alphabet), part.label);
  else
    detail::union_find_labels(p, ix, valid, generator_moves(p, ix.layout(), opts.alphabet), opts.workers,
                              part.label);

  std::vector<std::uint64_t> orbit_size(ix.size(), 0);
  for (std::uint64_t i = 0; i < ix.size(); ++i) {
    if (part.label[i] == OrbitPartition::kInvalid) continue;
    ++part.valid_states;
    if (part.label[i] == i) ++part.orbits;
    part.largest_orbit = std::max(part.largest_orbit, ++orbit_size[part.label[i]]);
  }
  return part;
}

struct OrbitResult {
  BigCount orbit_count;
  std::uint64_t state_space_size = 0;
  std::uint64_t valid_states = 0;
  std::uint64_t largest_orbit = 0;
  OrbitMethod method = OrbitMethod::kAuto;
  /// Smallest state of each orbit, ascending.
  std::vector<EpimorphismState> representatives;
};

inline OrbitResult orbit_count(const OddPrime& p, const Tuple5& v, const OrbitOptions& opts = {}) {
  const OrbitPartition part = orbit_partition(p, v, opts);
  const DenseIndexer ix(p, v, opts.budget);
  OrbitResult out;
  out.orbit_count = big(part.orbits);
  out.state_space_size = part.label.size();
  out.valid_states = part.valid_states;
  out.largest_orbit = part.largest_orbit;
  out.method = part.method;
  std::vector<std::uint32_t> x(ix.layout().width());
  for (std::uint64_t i = 0; i < part.label.size(); ++i) {
    if (part.label[i] != i) continue;
    ix.decode(i, x);
    out.representatives.emplace_back(v, x);
  }
  return out;
}

}  // namespace cyclic_actions
