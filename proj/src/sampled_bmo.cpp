#include "dyadic/sampled_bmo.hpp"

#include <algorithm>
#include <cmath>

#include "dyadic/error.hpp"
#include "dyadic/haar.hpp"
#include "dyadic/norms.hpp"
#include "dyadic/random.hpp"

namespace dyadic {

ShiftedProductGrid sampled_product_grid(std::uint64_t seed, int index) {
  if (index < 0) throw ValidationError("grid index must be non-negative");
  if (index == 0) return {};
  Rng rng(derive_seed(seed, static_cast<std::uint64_t>(index)));
  ShiftedProductGrid g;
  g.offset_s = rng.uniform();
  g.offset_t = rng.uniform();
  g.r_s = std::exp2(rng.uniform());
  g.r_t = std::exp2(rng.uniform());
  return g;
}

namespace {

// Row-stochastic overlap weights W(m, i) = |sub_m  cap  cell_i| / |sub_m| for
// the 2^(depth+1) subcells of [start, start + side) against the 2^depth cells of [0,1).
std::vector<double> overlap_weights(double start, double side, int depth) {
  const int sub = 1 << (depth + 1);
  const int cells = 1 << depth;
  const double sub_len = side / sub;
  const double cell_len = 1.0 / cells;
  std::vector<double> w(static_cast<std::size_t>(sub) * cells, 0.0);
  for (int m = 0; m < sub; ++m) {
    const double a = start + m * sub_len;
    const double b = a + sub_len;
    const int first = std::max(0, static_cast<int>(std::floor(a / cell_len)));
    const int last = std::min(cells - 1, static_cast<int>(std::floor(b / cell_len)));
    for (int i = first; i <= last; ++i) {
      const double lo = std::max(a, i * cell_len);
      const double hi = std::min(b, (i + 1) * cell_len);
      if (hi > lo) w[static_cast<std::size_t>(m) * cells + i] = (hi - lo) / sub_len;
    }
  }
  return w;
}

// Starts of level-0 blocks r (k + offset) meeting [0, 1).
std::vector<double> block_starts(double offset, double r) {
  std::vector<double> out;
  const auto k0 = static_cast<long>(std::floor(-offset)) - 1;
  for (long k = k0; k < k0 + 4; ++k) {
    const double a = r * (static_cast<double>(k) + offset);
    if (a < 1.0 && a + r > 0.0) out.push_back(a);
  }
  return out;
}

}  // namespace

std::vector<GridBlock> project_onto_grid(const GridFunction2D& b, const ShiftedProductGrid& grid) {
  const Depth d = b.depth();
  const Depth fine{d.s + 1, d.t + 1};
  std::vector<GridBlock> blocks;
  for (double s0 : block_starts(grid.offset_s, grid.r_s)) {
    const std::vector<double> ws = overlap_weights(s0, grid.r_s, d.s);
    for (double t0 : block_starts(grid.offset_t, grid.r_t)) {
      const std::vector<double> wt = overlap_weights(t0, grid.r_t, d.t);
      // (W_s B) then (.) W_t^T
      const int ms = fine.cells_s();
      const int mt = fine.cells_t();
      std::vector<double> tmp(static_cast<std::size_t>(ms) * d.cells_t(), 0.0);
      for (int m = 0; m < ms; ++m) {
        for (int i = 0; i < d.cells_s(); ++i) {
          const double w = ws[static_cast<std::size_t>(m) * d.cells_s() + i];
          if (w == 0.0) continue;
          for (int j = 0; j < d.cells_t(); ++j) tmp[static_cast<std::size_t>(m) * d.cells_t() + j] += w * b(i, j);
        }
      }
      std::vector<double> out(static_cast<std::size_t>(ms) * mt, 0.0);
      for (int m = 0; m < ms; ++m) {
        for (int n = 0; n < mt; ++n) {
          double sum = 0.0;
          for (int j = 0; j < d.cells_t(); ++j) {
            sum += tmp[static_cast<std::size_t>(m) * d.cells_t() + j] * wt[static_cast<std::size_t>(n) * d.cells_t() + j];
          }
          out[static_cast<std::size_t>(m) * mt + n] = sum;
        }
      }
      blocks.push_back({s0, t0, grid.r_s, grid.r_t, GridFunction2D(fine, std::move(out))});
    }
  }
  return blocks;
}

double grid_bmo_norm_sq(const GridFunction2D& b, const ShiftedProductGrid& grid) {
  double best = 0.0;
  for (const GridBlock& block : project_onto_grid(b, grid)) {
    // Block coordinates are scaled by the side lengths; the Carleson ratio is
    // scale invariant, so the unit-square computation applies.
    best = std::max(best, bmo_d_norm_sq(haar_forward_2d(block.values)).norm_sq);
  }
  return best;
}

double sampled_continuous_bmo(const GridFunction2D& b, int n_grids, std::uint64_t seed) {
  if (n_grids < 1) throw ValidationError("at least one grid is required");
  double best = bmo_d_norm_sq(haar_forward_2d(b)).norm_sq;
  for (int k = 1; k < n_grids; ++k) best = std::max(best, grid_bmo_norm_sq(b, sampled_product_grid(seed, k)));
  return best;
}

}  // namespace dyadic
