#pragma once

// Epimorphisms onto Z_{p^2}, stored as the images of the free-product
// generators. Conjugating elements act trivially on an abelian target, so a
// state is just a vector of residues.
//
// Flat layout, in this order (also the lexicographic order of states):
//   a_1..a_r | b_1,c_1, ..., b_s,c_s | d_1..d_t | e_1,f_1, ..., e_m,f_m | g_1..g_n

#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cyclic_actions/tuples.hpp"

namespace cyclic_actions {

enum class ResidueKind { kUnit, kOrderP, kZero };

/// Unit iff gcd(x, p^2) = 1; order p iff gcd(x, p^2) = p; otherwise zero.
inline ResidueKind classify_residue(const OddPrime& p, std::uint64_t x) {
  x %= p.squared();
  if (x == 0) return ResidueKind::kZero;
  return x % p.value() == 0 ? ResidueKind::kOrderP : ResidueKind::kUnit;
}

/// Generator classes, one per factor kind. kBC and kEF hold pairs.
enum class GeneratorClass { kA, kBC, kD, kEF, kG };

inline std::string_view class_name(GeneratorClass c) {
  switch (c) {
    case GeneratorClass::kA: return "a";
    case GeneratorClass::kBC: return "bc";
    case GeneratorClass::kD: return "d";
    case GeneratorClass::kEF: return "ef";
    case GeneratorClass::kG: return "g";
  }
  return "?";
}

/// Which residues a coordinate may take in any valid state.
enum class CoordinateDomain { kAll, kUnits, kOrderP };

class StateLayout {
 public:
  explicit StateLayout(const Tuple5& v)
      : v_(v),
        off_bc_(v.r),
        off_d_(off_bc_ + 2 * v.s),
        off_ef_(off_d_ + v.t),
        off_g_(off_ef_ + 2 * v.m),
        width_(off_g_ + v.n) {}

  const Tuple5& tuple() const { return v_; }
  std::size_t width() const { return width_; }

  std::size_t count(GeneratorClass c) const {
    switch (c) {
      case GeneratorClass::kA: return v_.r;
      case GeneratorClass::kBC: return v_.s;
      case GeneratorClass::kD: return v_.t;
      case GeneratorClass::kEF: return v_.m;
      case GeneratorClass::kG: return v_.n;
    }
    return 0;
  }
  static std::size_t entry_width(GeneratorClass c) {
    return c == GeneratorClass::kBC || c == GeneratorClass::kEF ? 2 : 1;
  }
  std::size_t class_offset(GeneratorClass c) const {
    switch (c) {
      case GeneratorClass::kA: return 0;
      case GeneratorClass::kBC: return off_bc_;
      case GeneratorClass::kD: return off_d_;
      case GeneratorClass::kEF: return off_ef_;
      case GeneratorClass::kG: return off_g_;
    }
    return 0;
  }
  /// Flat position of entry `index` of class `c`; `second` selects c_j / f_l.
  std::size_t position(GeneratorClass c, std::size_t index, bool second = false) const {
    if (index >= count(c) || (second && entry_width(c) == 1))
      throw std::out_of_range("no generator " + std::string(class_name(c)) + "[" +
                              std::to_string(index) + "]" + (second ? ".second" : ""));
    return class_offset(c) + index * entry_width(c) + (second ? 1 : 0);
  }

  GeneratorClass class_at(std::size_t pos) const {
    if (pos < off_bc_) return GeneratorClass::kA;
    if (pos < off_d_) return GeneratorClass::kBC;
    if (pos < off_ef_) return GeneratorClass::kD;
    if (pos < off_g_) return GeneratorClass::kEF;
    return GeneratorClass::kG;
  }

  /// Free-product factor a flat position belongs to (pairs share a factor).
  std::size_t factor_of(std::size_t pos) const {
    const GeneratorClass c = class_at(pos);
    const std::size_t base = class_offset(c);
    std::size_t factors_before = 0;
    for (GeneratorClass prior : {GeneratorClass::kA, GeneratorClass::kBC, GeneratorClass::kD,
                                 GeneratorClass::kEF}) {
      if (prior == c) break;
      factors_before += count(prior);
    }
    return factors_before + (pos - base) / entry_width(c);
  }

  CoordinateDomain domain_at(std::size_t pos) const {
    switch (class_at(pos)) {
      case GeneratorClass::kA: return CoordinateDomain::kAll;
      case GeneratorClass::kBC:
        return (pos - off_bc_) % 2 == 0 ? CoordinateDomain::kUnits : CoordinateDomain::kAll;
      case GeneratorClass::kD: return CoordinateDomain::kUnits;
      case GeneratorClass::kEF:
        return (pos - off_ef_) % 2 == 0 ? CoordinateDomain::kOrderP : CoordinateDomain::kAll;
      case GeneratorClass::kG: return CoordinateDomain::kOrderP;
    }
    return CoordinateDomain::kAll;
  }

  /// Whether the coordinate can carry a unit that makes the image surjective
  /// (a_i, b_j, c_j, d_k, f_l).
  bool can_generate(std::size_t pos) const { return domain_at(pos) != CoordinateDomain::kOrderP; }

 private:
  Tuple5 v_;
  std::size_t off_bc_, off_d_, off_ef_, off_g_, width_;
};

/// Residues allowed at a coordinate domain, ascending.
inline std::vector<std::uint32_t> domain_values(const OddPrime& p, CoordinateDomain dom) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t x = 0; x < p.squared(); ++x) {
    const ResidueKind k = classify_residue(p, x);
    if (dom == CoordinateDomain::kAll || (dom == CoordinateDomain::kUnits && k == ResidueKind::kUnit) ||
        (dom == CoordinateDomain::kOrderP && k == ResidueKind::kOrderP))
      out.push_back(static_cast<std::uint32_t>(x));
  }
  return out;
}

class EpimorphismState {
 public:
  EpimorphismState() = default;
  EpimorphismState(const Tuple5& v, std::vector<std::uint32_t> coords)
      : v_(v), coords_(std::move(coords)) {
    if (coords_.size() != StateLayout(v_).width())
      throw std::invalid_argument("state has " + std::to_string(coords_.size()) +
                                  " coordinates, tuple " + v_.to_string() + " needs " +
                                  std::to_string(StateLayout(v_).width()));
  }

  /// All-zero state for the tuple (not valid, a starting point for builders).
  static EpimorphismState zeros(const Tuple5& v) {
    return {v, std::vector<std::uint32_t>(StateLayout(v).width(), 0)};
  }

  const Tuple5& tuple() const { return v_; }
  StateLayout layout() const { return StateLayout(v_); }
  const std::vector<std::uint32_t>& coords() const { return coords_; }
  std::vector<std::uint32_t>& coords() { return coords_; }

  std::uint32_t a(std::size_t i) const { return at(GeneratorClass::kA, i, false); }
  std::uint32_t b(std::size_t j) const { return at(GeneratorClass::kBC, j, false); }
  std::uint32_t c(std::size_t j) const { return at(GeneratorClass::kBC, j, true); }
  std::uint32_t d(std::size_t k) const { return at(GeneratorClass::kD, k, false); }
  std::uint32_t e(std::size_t l) const { return at(GeneratorClass::kEF, l, false); }
  std::uint32_t f(std::size_t l) const { return at(GeneratorClass::kEF, l, true); }
  std::uint32_t g(std::size_t q) const { return at(GeneratorClass::kG, q, false); }

  std::uint32_t at(GeneratorClass cls, std::size_t index, bool second) const {
    return coords_[layout().position(cls, index, second)];
  }
  void set(GeneratorClass cls, std::size_t index, bool second, std::uint32_t value) {
    coords_[layout().position(cls, index, second)] = value;
  }

  /// Base-p^2 encoding, first coordinate most significant. Fails past 64 bits.
  std::uint64_t encode(const OddPrime& p) const {
    const std::uint64_t q = p.squared();
    std::uint64_t out = 0;
    for (std::uint32_t x : coords_) {
      if (out > (UINT64_MAX - x) / q) throw std::overflow_error("state encoding exceeds 64 bits");
      out = out * q + x;
    }
    return out;
  }

  friend auto operator<=>(const EpimorphismState&, const EpimorphismState&) = default;

 private:
  Tuple5 v_;
  std::vector<std::uint32_t> coords_;
};

/// Order constraints hold and the images generate Z_{p^2}.
inline bool is_valid_state(const OddPrime& p, const Tuple5& v, const EpimorphismState& state) {
  if (state.tuple() != v || state.coords().size() != StateLayout(v).width())
    throw std::invalid_argument("state dimensions do not match tuple " + v.to_string());
  const StateLayout layout(v);
  bool generates = false;
  for (std::size_t pos = 0; pos < layout.width(); ++pos) {
    const std::uint32_t x = state.coords()[pos];
    if (x >= p.squared()) return false;
    const ResidueKind kind = classify_residue(p, x);
    switch (layout.domain_at(pos)) {
      case CoordinateDomain::kUnits:
        if (kind != ResidueKind::kUnit) return false;
        break;
      case CoordinateDomain::kOrderP:
        if (kind != ResidueKind::kOrderP) return false;
        break;
      case CoordinateDomain::kAll: break;
    }
    if (kind == ResidueKind::kUnit && layout.can_generate(pos)) generates = true;
  }
  return generates;
}

// State dump lines: residues comma-separated within a class, classes joined
// by '|' in layout order, e.g. "|1,0|||" for (b_1, c_1) = (1, 0).

inline std::string dump_header(const OddPrime& p, const Tuple5& v) {
  std::ostringstream os;
  os << "p=" << p.value() << " v=" << v.r << ',' << v.s << ',' << v.t << ',' << v.m << ','
     << v.n;
  return os.str();
}

inline std::string dump_state(const EpimorphismState& state) {
  const StateLayout layout = state.layout();
  std::ostringstream os;
  bool first_class = true;
  for (GeneratorClass cls : {GeneratorClass::kA, GeneratorClass::kBC, GeneratorClass::kD,
                             GeneratorClass::kEF, GeneratorClass::kG}) {
    if (!first_class) os << '|';
    first_class = false;
    const std::size_t begin = layout.class_offset(cls);
    const std::size_t end = begin + layout.count(cls) * StateLayout::entry_width(cls);
    for (std::size_t pos = begin; pos < end; ++pos) {
      if (pos != begin) os << ',';
      os << state.coords()[pos];
    }
  }
  return os.str();
}

inline EpimorphismState parse_state(const Tuple5& v, std::string_view line) {
  const StateLayout layout(v);
  std::vector<std::uint32_t> coords;
  std::size_t cls_index = 0;
  constexpr GeneratorClass kOrder[] = {GeneratorClass::kA, GeneratorClass::kBC, GeneratorClass::kD,
                                       GeneratorClass::kEF, GeneratorClass::kG};
  std::size_t begin = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i < line.size() && line[i] != '|') continue;
    if (cls_index >= 5) throw std::invalid_argument("state line has more than 5 classes");
    const GeneratorClass cls = kOrder[cls_index++];
    const std::size_t expected = layout.count(cls) * StateLayout::entry_width(cls);
    std::string_view part = line.substr(begin, i - begin);
    std::size_t got = 0;
    std::size_t tok = 0;
    while (!part.empty() && tok <= part.size()) {
      std::size_t comma = part.find(',', tok);
      if (comma == std::string_view::npos) comma = part.size();
      std::string_view field = part.substr(tok, comma - tok);
      if (field.empty() || field.size() > 9 ||
          field.find_first_not_of("0123456789") != std::string_view::npos)
        throw std::invalid_argument("bad residue '" + std::string(field) + "' in state line");
      coords.push_back(static_cast<std::uint32_t>(std::stoul(std::string(field))));
      ++got;
      tok = comma + 1;
    }
    if (got != expected)
      throw std::invalid_argument("class " + std::string(class_name(cls)) + " has " +
                                  std::to_string(got) + " residues, expected " +
                                  std::to_string(expected));
    begin = i + 1;
  }
  if (cls_index != 5) throw std::invalid_argument("state line needs 5 classes separated by '|'");
  return EpimorphismState(v, std::move(coords));
}

}  // namespace cyclic_actions
