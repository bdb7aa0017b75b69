#pragma once

#include <bit>
#include <cmath>
#include <compare>
#include <cstdint>
#include <string>

namespace dyadic {

/// Resolution of a 2^s x 2^t cell grid over [0,1)^2.
struct Depth {
  int s = 0;
  int t = 0;

  int cells_s() const noexcept { return 1 << s; }
  int cells_t() const noexcept { return 1 << t; }
  int cell_count() const noexcept { return cells_s() * cells_t(); }
  double cell_area() const noexcept { return 1.0 / static_cast<double>(cell_count()); }

  friend bool operator==(const Depth&, const Depth&) = default;
};

std::string to_string(const Depth& d);

/// Heap numbering of the 1D Haar basis: 0 is the constant, 2^level + index
/// is h_I. Children of heap index n are 2n (left) and 2n+1 (right).
inline int heap_level(int heap) noexcept {
  return static_cast<int>(std::bit_width(static_cast<unsigned>(heap))) - 1;
}

/// Dyadic interval [index 2^-level, (index+1) 2^-level).
struct DyadicInterval {
  int level = 0;
  std::int64_t index = 0;

  DyadicInterval() = default;
  DyadicInterval(int level, std::int64_t index);

  static DyadicInterval from_heap(int heap);

  int heap() const noexcept { return (1 << level) + static_cast<int>(index); }
  double length() const noexcept { return std::ldexp(1.0, -level); }
  double left_end() const noexcept { return std::ldexp(static_cast<double>(index), -level); }

  /// I^- (left half).
  DyadicInterval left() const { return {level + 1, 2 * index}; }
  /// I^+ (right half).
  DyadicInterval right() const { return {level + 1, 2 * index + 1}; }
  bool has_parent() const noexcept { return level > 0; }
  DyadicInterval parent() const;

  bool contains(const DyadicInterval& other) const noexcept;

  /// First and one-past-last cell covered at resolution `depth` (requires level <= depth).
  int first_cell(int depth) const noexcept { return static_cast<int>(index << (depth - level)); }
  int end_cell(int depth) const noexcept { return static_cast<int>((index + 1) << (depth - level)); }

  friend bool operator==(const DyadicInterval&, const DyadicInterval&) = default;
  friend auto operator<=>(const DyadicInterval&, const DyadicInterval&) = default;
};

struct DyadicRect {
  DyadicInterval s;
  DyadicInterval t;

  double area() const noexcept { return s.length() * t.length(); }
  bool contains(const DyadicRect& other) const noexcept {
    return s.contains(other.s) && t.contains(other.t);
  }

  friend bool operator==(const DyadicRect&, const DyadicRect&) = default;
};

/// Generation (j1, j2) of dyadic rectangles: |I| = 2^-j1, |J| = 2^-j2.
struct GenerationIndex {
  int j1 = 0;
  int j2 = 0;

  friend bool operator==(const GenerationIndex&, const GenerationIndex&) = default;
};

/// Componentwise strict order: k1 < j1 and k2 < j2.
inline bool strictly_below(const GenerationIndex& k, const GenerationIndex& j) noexcept {
  return k.j1 < j.j1 && k.j2 < j.j2;
}

/// Componentwise order: k1 <= j1 and k2 <= j2.
inline bool below_or_equal(const GenerationIndex& k, const GenerationIndex& j) noexcept {
  return k.j1 <= j.j1 && k.j2 <= j.j2;
}

inline GenerationIndex generation_of(const DyadicRect& r) noexcept { return {r.s.level, r.t.level}; }

}  // namespace dyadic
