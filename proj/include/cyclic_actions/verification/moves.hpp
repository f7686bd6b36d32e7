#pragma once

// Image-level action of realizable automorphisms on epimorphism states.
//
//   PERMUTE  swap two entries of one class (handle interchange)
//   SPIN     negate one entry; pairs negate both coordinates
//   TWIST    (b, c) -> (b, c + v b), v in [0, p^2);  (e, f) -> (e, f + w e), w in [0, p)
//   SLIDE    a_i -> a_i + k x, x the image of a generator of another factor
//
// Every move is a bijection on valid states; its inverse is in the alphabet.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclic_actions/verification/state.hpp"

namespace cyclic_actions {

enum class MoveKind { kPermute, kSpin, kTwist, kSlide };

inline std::string_view move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::kPermute: return "PERMUTE";
    case MoveKind::kSpin: return "SPIN";
    case MoveKind::kTwist: return "TWIST";
    case MoveKind::kSlide: return "SLIDE";
  }
  return "?";
}

/// A single generator image, e.g. c_2 is {kBC, 1, true}.
struct GeneratorRef {
  GeneratorClass cls = GeneratorClass::kA;
  std::uint32_t index = 0;
  bool second = false;

  friend bool operator==(const GeneratorRef&, const GeneratorRef&) = default;
};

struct Move {
  MoveKind kind = MoveKind::kSpin;
  GeneratorClass cls = GeneratorClass::kA;
  std::uint32_t index = 0;
  /// Second entry for PERMUTE.
  std::uint32_t other = 0;
  /// SPIN sign; +1 is the identity.
  int sign = -1;
  /// TWIST amount (v or w) or SLIDE multiplier k, already reduced.
  std::uint64_t amount = 0;
  /// SLIDE source; the target is always a_index.
  GeneratorRef source;

  static Move permute(GeneratorClass cls, std::uint32_t i, std::uint32_t j) {
    Move mv;
    mv.kind = MoveKind::kPermute;
    mv.cls = cls;
    mv.index = i;
    mv.other = j;
    return mv;
  }
  static Move spin(GeneratorClass cls, std::uint32_t i, int sign = -1) {
    Move mv;
    mv.kind = MoveKind::kSpin;
    mv.cls = cls;
    mv.index = i;
    mv.sign = sign;
    return mv;
  }
  static Move twist(GeneratorClass cls, std::uint32_t i, std::uint64_t amount) {
    Move mv;
    mv.kind = MoveKind::kTwist;
    mv.cls = cls;
    mv.index = i;
    mv.amount = amount;
    return mv;
  }
  static Move slide(std::uint32_t target, GeneratorRef source, std::uint64_t k) {
    Move mv;
    mv.kind = MoveKind::kSlide;
    mv.cls = GeneratorClass::kA;
    mv.index = target;
    mv.source = source;
    mv.amount = k;
    return mv;
  }

  std::string to_string() const {
    std::string out(move_kind_name(kind));
    out += ' ';
    out += class_name(cls);
    out += '[' + std::to_string(index) + ']';
    switch (kind) {
      case MoveKind::kPermute: out += "<->[" + std::to_string(other) + ']'; break;
      case MoveKind::kSpin: out += sign < 0 ? " eps=-1" : " eps=+1"; break;
      case MoveKind::kTwist: out += " by " + std::to_string(amount); break;
      case MoveKind::kSlide:
        out += " += " + std::to_string(amount) + "*" + std::string(class_name(source.cls)) + '[' +
               std::to_string(source.index) + ']' + (source.second ? ".2" : "");
        break;
    }
    return out;
  }

  friend bool operator==(const Move&, const Move&) = default;
};

/// Modulus of a TWIST amount on the given class.
inline std::uint64_t twist_modulus(const OddPrime& p, GeneratorClass cls) {
  return cls == GeneratorClass::kEF ? p.value() : p.squared();
}

/// Throws std::invalid_argument if the move does not fit the layout.
inline void check_move(const OddPrime& p, const StateLayout& layout, const Move& mv) {
  auto in_range = [&](GeneratorClass cls, std::uint32_t i) {
    if (i >= layout.count(cls))
      throw std::invalid_argument("move index out of range: " + mv.to_string());
  };
  switch (mv.kind) {
    case MoveKind::kPermute:
      in_range(mv.cls, mv.index);
      in_range(mv.cls, mv.other);
      break;
    case MoveKind::kSpin:
      in_range(mv.cls, mv.index);
      if (mv.sign != 1 && mv.sign != -1) throw std::invalid_argument("spin sign must be +-1");
      break;
    case MoveKind::kTwist:
      if (mv.cls != GeneratorClass::kBC && mv.cls != GeneratorClass::kEF)
        throw std::invalid_argument("twist acts only on bc or ef pairs: " + mv.to_string());
      in_range(mv.cls, mv.index);
      if (mv.amount >= twist_modulus(p, mv.cls))
        throw std::invalid_argument("twist amount out of range: " + mv.to_string());
      break;
    case MoveKind::kSlide:
      if (mv.cls != GeneratorClass::kA)
        throw std::invalid_argument("slides target handle generators only: " + mv.to_string());
      in_range(GeneratorClass::kA, mv.index);
      in_range(mv.source.cls, mv.source.index);
      if (mv.source.second && StateLayout::entry_width(mv.source.cls) == 1)
        throw std::invalid_argument("slide source has no second coordinate: " + mv.to_string());
      if (mv.source.cls == GeneratorClass::kA && mv.source.index == mv.index)
        throw std::invalid_argument("slide within its own factor: " + mv.to_string());
      if (mv.amount >= p.squared())
        throw std::invalid_argument("slide multiplier out of range: " + mv.to_string());
      break;
  }
}

/// Applies `mv` to flat coordinates in place. No range checks.
inline void apply_move_unchecked(std::uint64_t q, const StateLayout& layout, const Move& mv,
                                 std::span<std::uint32_t> x) {
  const std::size_t width = StateLayout::entry_width(mv.cls);
  const std::size_t base = layout.class_offset(mv.cls);
  auto neg = [q](std::uint32_t y) { return static_cast<std::uint32_t>((q - y) % q); };
  switch (mv.kind) {
    case MoveKind::kPermute: {
      const std::size_t i = base + mv.index * width;
      const std::size_t j = base + mv.other * width;
      for (std::size_t w = 0; w < width; ++w) std::swap(x[i + w], x[j + w]);
      break;
    }
    case MoveKind::kSpin: {
      if (mv.sign > 0) break;
      const std::size_t i = base + mv.index * width;
      for (std::size_t w = 0; w < width; ++w) x[i + w] = neg(x[i + w]);
      break;
    }
    case MoveKind::kTwist: {
      const std::size_t i = base + mv.index * 2;
      x[i + 1] = static_cast<std::uint32_t>((x[i + 1] + mv.amount * x[i]) % q);
      break;
    }
    case MoveKind::kSlide: {
      const std::size_t src = layout.class_offset(mv.source.cls) +
                              mv.source.index * StateLayout::entry_width(mv.source.cls) +
                              (mv.source.second ? 1 : 0);
      x[mv.index] = static_cast<std::uint32_t>((x[mv.index] + mv.amount * x[src]) % q);
      break;
    }
  }
}

inline EpimorphismState apply_move(const OddPrime& p, const EpimorphismState& state, const Move& mv) {
  const StateLayout layout = state.layout();
  check_move(p, layout, mv);
  EpimorphismState out = state;
  apply_move_unchecked(p.squared(), layout, mv, out.coords());
  return out;
}

/// The move undoing `mv`.
inline Move inverse_move(const OddPrime& p, const Move& mv) {
  Move inv = mv;
  switch (mv.kind) {
    case MoveKind::kPermute:
    case MoveKind::kSpin: break;
    case MoveKind::kTwist: {
      const std::uint64_t mod = twist_modulus(p, mv.cls);
      inv.amount = (mod - mv.amount % mod) % mod;
      break;
    }
    case MoveKind::kSlide: inv.amount = (p.squared() - mv.amount) % p.squared(); break;
  }
  return inv;
}

/// Named move-set configuration. The default is the set of moves used to
/// reach normal form: interchanges, spins, Dehn twists and handle slides onto
/// a-generators from any generator of another factor.
struct MoveAlphabet {
  std::string name = "handle-moves/v1";
  bool permute = true;
  bool spin = true;
  bool twist = true;
  bool slide = true;

  static MoveAlphabet standard() { return {}; }
};

/// Every move of the alphabet for a layout: all transpositions, spins,
/// twist amounts and slide multipliers.
inline std::vector<Move> full_moves(const OddPrime& p, const StateLayout& layout,
                                    const MoveAlphabet& alphabet = {}) {
  std::vector<Move> out;
  constexpr GeneratorClass kClasses[] = {GeneratorClass::kA, GeneratorClass::kBC, GeneratorClass::kD,
                                         GeneratorClass::kEF, GeneratorClass::kG};
  for (GeneratorClass cls : kClasses) {
    const auto n = static_cast<std::uint32_t>(layout.count(cls));
    if (alphabet.permute)
      for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j) out.push_back(Move::permute(cls, i, j));
    if (alphabet.spin)
      for (std::uint32_t i = 0; i < n; ++i) out.push_back(Move::spin(cls, i));
    if (alphabet.twist && (cls == GeneratorClass::kBC || cls == GeneratorClass::kEF))
      for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint64_t amt = 1; amt < twist_modulus(p, cls); ++amt)
          out.push_back(Move::twist(cls, i, amt));
  }
  if (alphabet.slide) {
    for (std::uint32_t target = 0; target < layout.count(GeneratorClass::kA); ++target)
      for (std::size_t pos = 0; pos < layout.width(); ++pos) {
        if (pos == target) continue;
        const GeneratorClass cls = layout.class_at(pos);
        const std::size_t rel = pos - layout.class_offset(cls);
        const GeneratorRef src{cls, static_cast<std::uint32_t>(rel / StateLayout::entry_width(cls)),
                               rel % StateLayout::entry_width(cls) == 1};
        for (std::uint64_t k = 1; k < p.squared(); ++k) out.push_back(Move::slide(target, src, k));
      }
  }
  return out;
}

/// A generating subset: adjacent transpositions, spins, unit twists and unit
/// slides. It generates the same group as full_moves, so orbits agree.
inline std::vector<Move> generator_moves(const OddPrime& /*p*/, const StateLayout& layout,
                                         const MoveAlphabet& alphabet = {}) {
  std::vector<Move> out;
  constexpr GeneratorClass kClasses[] = {GeneratorClass::kA, GeneratorClass::kBC, GeneratorClass::kD,
                                         GeneratorClass::kEF, GeneratorClass::kG};
  for (GeneratorClass cls : kClasses) {
    const auto n = static_cast<std::uint32_t>(layout.count(cls));
    if (alphabet.permute)
      for (std::uint32_t i = 0; i + 1 < n; ++i) out.push_back(Move::permute(cls, i, i + 1));
    if (alphabet.spin)
      for (std::uint32_t i = 0; i < n; ++i) out.push_back(Move::spin(cls, i));
    if (alphabet.twist && (cls == GeneratorClass::kBC || cls == GeneratorClass::kEF))
      for (std::uint32_t i = 0; i < n; ++i) out.push_back(Move::twist(cls, i, 1));
  }
  if (alphabet.slide) {
    for (std::uint32_t target = 0; target < layout.count(GeneratorClass::kA); ++target)
      for (std::size_t pos = 0; pos < layout.width(); ++pos) {
        if (pos == target) continue;
        const GeneratorClass cls = layout.class_at(pos);
        const std::size_t rel = pos - layout.class_offset(cls);
        const GeneratorRef src{cls, static_cast<std::uint32_t>(rel / StateLayout::entry_width(cls)),
                               rel % StateLayout::entry_width(cls) == 1};
        out.push_back(Move::slide(target, src, 1));
      }
  }
  return out;
}

}  // namespace cyclic_actions
