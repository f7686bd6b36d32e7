#pragma once

// Counting nondecreasing j-tuples over a k-letter alphabet.
//
// C(j) is the set of tuples (y_{i_1}, ..., y_{i_j}) with i_1 <= ... <= i_j
// drawn from {y_1, ..., y_k}; C(j, l) is the subset whose first coordinate is
// y_{k-(l-1)}. count_A evaluates |C(j)| by the closed double sum, count_C_jl
// evaluates |C(j, l)| by the prefix-sum recurrence, and
// brute_count_nondecreasing walks C(j) explicitly.

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclic_actions/big_count.hpp"

namespace cyclic_actions {

struct MultisetCountQuery {
  std::uint64_t k = 1;
  std::uint64_t j = 0;

  void validate() const {
    if (k < 1) throw std::invalid_argument("alphabet size k must be >= 1");
  }
};

inline BigCount binomial(std::uint64_t n, std::uint64_t r) {
  BigCount out;
  mpz_bin_uiui(out.get_mpz_t(), n, r);
  return out;
}

/// Options for the explicit enumeration oracle.
struct BruteForceOptions {
  /// Maximum number of tuples visited before giving up with ResourceError.
  std::uint64_t budget = 50'000'000;
  /// Called with each tuple (1-based letter indices) in lexicographic order.
  std::function<void(std::span<const std::uint32_t>)> on_tuple;
};

/// |C(j)| by walking every nondecreasing j-tuple over {1..k} in lexicographic
/// order. j = 0 yields the single empty tuple.
inline BigCount brute_count_nondecreasing(std::uint64_t k, std::uint64_t j,
                                          const BruteForceOptions& opts = {}) {
  MultisetCountQuery{k, j}.validate();
  if (k > std::numeric_limits<std::uint32_t>::max())
    throw std::invalid_argument("alphabet too large for explicit enumeration");

  std::vector<std::uint32_t> tuple(j, 1);
  std::uint64_t visited = 0;
  const auto top = static_cast<std::uint32_t>(k);
  while (true) {
    if (++visited > opts.budget)
      throw ResourceError("nondecreasing tuple enumeration exceeded budget of " +
                              std::to_string(opts.budget),
                          visited);
    if (opts.on_tuple) opts.on_tuple(tuple);

    // Advance: bump the rightmost coordinate below k, reset the tail to it.
    std::size_t pos = tuple.size();
    while (pos > 0 && tuple[pos - 1] == top) --pos;
    if (pos == 0) break;
    const std::uint32_t next = tuple[pos - 1] + 1;
    for (std::size_t i = pos - 1; i < tuple.size(); ++i) tuple[i] = next;
  }
  return big(visited);
}

/// A_{k,j}: 1 for j = 0, k for j = 1, k(k+1)/2 for j = 2, and
///   sum_{i=0}^{k-1} binom(j-3+i, j-3) * (k-i)(k-i+1)/2
/// for j >= 3.
inline BigCount count_A(std::uint64_t k, std::uint64_t j) {
  MultisetCountQuery{k, j}.validate();
  if (j == 0) return 1;
  if (j == 1) return big(k);
  if (j == 2) {
    BigCount kk = big(k);
    return kk * (kk + 1) / 2;
  }
  BigCount total = 0;
  for (std::uint64_t i = 0; i < k; ++i) {
    BigCount width = big(k - i);
    BigCount triangle = width * (width + 1) / 2;
    total += binomial(j - 3 + i, j - 3) * triangle;
  }
  return total;
}

/// |C(j, l)| for every l in 1..k, indexed [l-1]. Base |C(1, l)| = 1, then
/// |C(j+1, l)| = sum_{u=1}^{l} |C(j, u)|.
inline std::vector<BigCount> count_C_j_row(std::uint64_t k, std::uint64_t j) {
  MultisetCountQuery{k, j}.validate();
  if (j < 1) throw std::invalid_argument("C(j, l) requires j >= 1");
  std::vector<BigCount> row(k, BigCount(1));
  for (std::uint64_t step = 1; step < j; ++step) {
    BigCount running = 0;
    for (auto& cell : row) {
      running += cell;
      cell = running;
    }
  }
  return row;
}

inline BigCount count_C_jl(std::uint64_t k, std::uint64_t j, std::uint64_t l) {
  if (l < 1 || l > k)
    throw std::invalid_argument("C(j, l) requires 1 <= l <= k, got l=" +
                                std::to_string(l));
  return count_C_j_row(k, j)[l - 1];
}

}  // namespace cyclic_actions
