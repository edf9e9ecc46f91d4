#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace galaxia {

/// Total map arc id -> colour in 1..colour_count.
struct ArcColouring {
  std::vector<int> colour;
  int colour_count = 0;

  /// Number of distinct colours actually used.
  int used_colours() const;
  int max_colour() const;

  friend bool operator==(const ArcColouring&, const ArcColouring&) = default;
};

/// Small set of colours drawn from 1..31.
class ColourSet {
 public:
  constexpr ColourSet() = default;

  static constexpr ColourSet range(int lo, int hi) {
    ColourSet s;
    for (int c = lo; c <= hi; ++c) s.insert(c);
    return s;
  }
  static constexpr ColourSet of(std::initializer_list<int> cs) {
    ColourSet s;
    for (int c : cs) s.insert(c);
    return s;
  }
  static constexpr ColourSet from_bits(std::uint32_t bits) {
    ColourSet s;
    s.bits_ = bits;
    return s;
  }

  constexpr bool contains(int c) const { return (bits_ >> c) & 1u; }
  constexpr void insert(int c) { bits_ |= 1u << c; }
  constexpr void erase(int c) { bits_ &= ~(1u << c); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int smallest() const { return empty() ? 0 : std::countr_zero(bits_); }
  constexpr std::uint32_t bits() const { return bits_; }

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  friend constexpr ColourSet operator|(ColourSet a, ColourSet b) { return from_bits(a.bits_ | b.bits_); }
  friend constexpr ColourSet operator&(ColourSet a, ColourSet b) { return from_bits(a.bits_ & b.bits_); }
  friend constexpr ColourSet operator-(ColourSet a, ColourSet b) { return from_bits(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(ColourSet, ColourSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Per-arc lists of allowed colours.
using ListAssignment = std::vector<ColourSet>;

}  // namespace galaxia
