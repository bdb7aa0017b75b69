#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "dyadic/haar.hpp"

namespace dyadic {

/// Subset of fine-grid cells, row-major like GridFunction2D.
struct CellMask {
  Depth depth;
  std::vector<std::uint8_t> cells;

  static CellMask empty(Depth depth);
  static CellMask of(const DyadicRect& r, Depth depth);

  bool contains(int s_cell, int t_cell) const {
    return cells[static_cast<std::size_t>(s_cell) * depth.cells_t() + t_cell] != 0;
  }
  bool contains(const DyadicRect& r) const;
  int count() const;
  double area() const { return count() * depth.cell_area(); }
};

namespace projection {
struct Delta { GenerationIndex j; };
struct E { GenerationIndex j; };
struct Q { GenerationIndex j; };
struct E1 { int i; };
struct Q1 { int i; };
struct E2 { int j; };
struct Q2 { int j; };
/// Generations j1 in [2^N - 1, 2^{N+1} - 2] and j2 in [2^K - 1, 2^{K+1} - 2].
struct Band { int n; int k; };
/// Generations j1 >= 2^N - 1 and j2 >= 2^K - 1.
struct TailBand { int n; int k; };
struct OpenSet { CellMask mask; };
}  // namespace projection

using ProjectionSelector =
    std::variant<projection::Delta, projection::E, projection::Q, projection::E1, projection::Q1,
                 projection::E2, projection::Q2, projection::Band, projection::TailBand,
                 projection::OpenSet>;

/// Whether the selector keeps the hh coefficient of rectangle r.
bool keeps(const ProjectionSelector& sel, const DyadicRect& r);

/// Diagonal projection acting on the hh block; cc, hc and ch are zeroed.
HaarSpectrum2D apply_projection(const HaarSpectrum2D& c, const ProjectionSelector& sel);

/// Full conditional expectation onto functions constant on generation-k
/// blocks: keeps cc, hc with s-level < k1, ch with t-level < k2 and hh with
/// both levels below k.
HaarSpectrum2D conditional_expectation(const HaarSpectrum2D& c, GenerationIndex k);

}  // namespace dyadic
