#pragma once

#include <cstdint>
#include <vector>

#include "dyadic/grid.hpp"

namespace dyadic {

/// Product grid r * (Z + x0) per axis at level 0 (unit-scale blocks of side r).
struct ShiftedProductGrid {
  double offset_s = 0.0;
  double offset_t = 0.0;
  double r_s = 1.0;
  double r_t = 1.0;
};

/// Grid number `index` of the sampled sequence; index 0 is the standard grid.
ShiftedProductGrid sampled_product_grid(std::uint64_t seed, int index);

/// Level-0 block of a shifted grid meeting [0,1)^2, with b (zero-extended)
/// averaged onto a 2^(J+1)-per-axis subgrid of the block.
struct GridBlock {
  double s0 = 0.0;
  double t0 = 0.0;
  double side_s = 1.0;
  double side_t = 1.0;
  GridFunction2D values;
};

std::vector<GridBlock> project_onto_grid(const GridFunction2D& b, const ShiftedProductGrid& grid);

/// Largest squared dyadic BMO norm of b over the blocks of one shifted grid.
double grid_bmo_norm_sq(const GridFunction2D& b, const ShiftedProductGrid& grid);

/// Maximum of grid_bmo_norm_sq over the first n_grids sampled grids: a lower
/// bound for the grid-uniform norm, non-decreasing in n_grids.
double sampled_continuous_bmo(const GridFunction2D& b, int n_grids, std::uint64_t seed);

}  // namespace dyadic
