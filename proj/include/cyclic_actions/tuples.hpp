#pragma once

// Shapes of the quotient orbifold and the genus relation.
//
// A Tuple5 (r, s, t, m, n) counts the free factors of each kind in the
// orbifold fundamental group: Z, Z_{p^2} x Z, Z_{p^2}, Z_p x Z and Z_p.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cyclic_actions {

class OddPrime {
 public:
  explicit OddPrime(std::uint64_t p) : p_(p) {
    if (!is_odd_prime(p))
      throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
    // Keeps p^2 residues and genus arithmetic well inside 64 bits.
    if (p > 65'521) throw std::invalid_argument("prime too large: " + std::to_string(p));
  }

  static bool is_odd_prime(std::uint64_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
      if (p % d == 0) return false;
    return true;
  }

  std::uint64_t value() const { return p_; }
  std::uint64_t squared() const { return p_ * p_; }
  /// p(p-1)/2: units of Z_{p^2} in [1, (p^2-1)/2].
  std::uint64_t half_units() const { return p_ * (p_ - 1) / 2; }
  /// (p-1)/2: order-p elements of Z_{p^2} in [1, (p^2-1)/2].
  std::uint64_t half_order_p() const { return (p_ - 1) / 2; }
  /// (p-1)^2/2.
  std::uint64_t half_unit_pairs() const { return (p_ - 1) * (p_ - 1) / 2; }

  friend bool operator==(const OddPrime&, const OddPrime&) = default;

 private:
  std::uint64_t p_;
};

struct Tuple5 {
  std::uint32_t r = 0, s = 0, t = 0, m = 0, n = 0;

  bool has_nonperiodic_factor() const { return r + s + t + m > 0; }

  void validate() const {
    if (!has_nonperiodic_factor())
      throw std::invalid_argument("tuple " + to_string() + " needs r+s+t+m > 0");
  }

  std::array<std::uint32_t, 5> as_array() const { return {r, s, t, m, n}; }

  std::string to_string() const {
    std::ostringstream os;
    os << '(' << r << ',' << s << ',' << t << ',' << m << ',' << n << ')';
    return os.str();
  }

  /// Parses "r,s,t,m,n" (no parentheses, no spaces).
  static Tuple5 parse(std::string_view text) {
    std::array<std::uint32_t, 5> parts{};
    std::size_t idx = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
      if (i < text.size() && text[i] != ',') continue;
      if (idx >= parts.size()) throw std::invalid_argument("tuple has more than 5 entries");
      auto field = text.substr(start, i - start);
      if (field.empty() || field.size() > 9 ||
          field.find_first_not_of("0123456789") != std::string_view::npos)
        throw std::invalid_argument("bad tuple entry '" + std::string(field) + "'");
      parts[idx++] = static_cast<std::uint32_t>(std::stoul(std::string(field)));
      start = i + 1;
    }
    if (idx != parts.size()) throw std::invalid_argument("tuple needs exactly 5 entries");
    return {parts[0], parts[1], parts[2], parts[3], parts[4]};
  }

  friend auto operator<=>(const Tuple5&, const Tuple5&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Tuple5& v) {
    return os << v.to_string();
  }
};

enum class CaseTag { kCaseST, kCaseR, kCaseM };

inline std::string_view case_name(CaseTag c) {
  switch (c) {
    case CaseTag::kCaseST: return "CASE_ST";
    case CaseTag::kCaseR: return "CASE_R";
    case CaseTag::kCaseM: return "CASE_M";
  }
  return "?";
}

inline CaseTag classify(const Tuple5& v) {
  v.validate();
  if (v.s + v.t > 0) return CaseTag::kCaseST;
  if (v.r > 0) return CaseTag::kCaseR;
  return CaseTag::kCaseM;
}

class Genus {
 public:
  explicit Genus(std::uint64_t g) : g_(g) {
    if (g < 1) throw std::invalid_argument("genus must be >= 1");
  }
  std::uint64_t value() const { return g_; }
  friend bool operator==(const Genus&, const Genus&) = default;

 private:
  std::uint64_t g_;
};

/// Raw genus relation g = 1 + p^2(r+s+m-1) + (p^2-1)t + (p^2-p)n, which may be
/// below 1 for tuples without r, s or m.
inline std::int64_t raw_genus(const OddPrime& p, const Tuple5& v) {
  const auto q = static_cast<std::int64_t>(p.squared());
  const auto pp = static_cast<std::int64_t>(p.value());
  const std::int64_t rsm = std::int64_t{v.r} + v.s + v.m;
  return 1 + q * (rsm - 1) + (q - 1) * std::int64_t{v.t} + (q - pp) * std::int64_t{v.n};
}

inline Genus genus_of(const OddPrime& p, const Tuple5& v) {
  v.validate();
  const std::int64_t g = raw_genus(p, v);
  if (g < 1)
    throw std::invalid_argument("tuple " + v.to_string() + " is inadmissible for p=" +
                                std::to_string(p.value()) + " (genus " +
                                std::to_string(g) + " < 1)");
  return Genus(static_cast<std::uint64_t>(g));
}

/// Every tuple with r+s+t+m > 0 whose genus is g, in lexicographic order.
inline std::vector<Tuple5> admissible_tuples(const OddPrime& p, const Genus& g) {
  const std::uint64_t q = p.squared();
  // g - 1 + p^2 = p^2 (r+s+m) + (p^2-1) t + (p^2-p) n, all terms nonnegative.
  const std::uint64_t rhs = g.value() - 1 + q;
  const std::uint64_t max_rsm = rhs / q;
  const std::uint64_t max_t = rhs / (q - 1);
  const std::uint64_t max_n = rhs / (q - p.value());

  std::vector<Tuple5> out;
  for (std::uint64_t r = 0; r <= max_rsm; ++r)
    for (std::uint64_t s = 0; r + s <= max_rsm; ++s)
      for (std::uint64_t t = 0; t <= max_t; ++t)
        for (std::uint64_t m = 0; r + s + m <= max_rsm; ++m) {
          const std::uint64_t used = q * (r + s + m) + (q - 1) * t;
          if (used > rhs) break;
          const std::uint64_t rest = rhs - used;
          if (rest % (q - p.value()) != 0) continue;
          const std::uint64_t n = rest / (q - p.value());
          if (n > max_n || r + s + t + m == 0) continue;
          out.push_back(Tuple5{static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(s),
                               static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(m),
                               static_cast<std::uint32_t>(n)});
        }
  return out;
}

}  // namespace cyclic_actions
