#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace cyclic_actions {

/// Arbitrary-precision nonnegative count. Never truncated.
using BigCount = mpz_class;

/// Thrown when an enumeration would exceed its configured state budget.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::uint64_t required)
      : std::runtime_error(what), required_(required) {}

  /// Number of states the computation needed (a lower bound if it overflowed).
  std::uint64_t required() const noexcept { return required_; }

 private:
  std::uint64_t required_;
};

inline std::string to_decimal(const BigCount& c) { return c.get_str(10); }

inline BigCount from_decimal(const std::string& s) {
  BigCount c;
  if (s.empty() || c.set_str(s, 10) != 0 || c < 0)
    throw std::invalid_argument("not a nonnegative decimal count: '" + s + "'");
  return c;
}

static_assert(sizeof(unsigned long) >= sizeof(std::uint64_t),
              "BigCount construction assumes 64-bit unsigned long");

inline BigCount big(std::uint64_t v) { return BigCount(static_cast<unsigned long>(v)); }

}  // namespace cyclic_actions
