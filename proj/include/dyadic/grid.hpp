#pragma once

#include <span>
#include <vector>

#include "dyadic/lattice.hpp"

namespace dyadic {

/// Piecewise-constant function on the 2^s x 2^t cell grid of [0,1)^2.
/// Values are stored row-major: row = s-cell, column = t-cell.
class GridFunction2D {
 public:
  GridFunction2D(Depth depth, std::vector<double> values);

  static GridFunction2D zeros(Depth depth);
  static GridFunction2D constant(Depth depth, double value);

  Depth depth() const noexcept { return depth_; }
  int rows() const noexcept { return depth_.cells_s(); }
  int cols() const noexcept { return depth_.cells_t(); }

  double operator()(int s_cell, int t_cell) const { return values_[index(s_cell, t_cell)]; }
  std::span<const double> values() const noexcept { return values_; }

  double integral() const;
  double l2_norm_sq() const;

  friend bool operator==(const GridFunction2D&, const GridFunction2D&) = default;

 private:
  std::size_t index(int s_cell, int t_cell) const noexcept {
    return static_cast<std::size_t>(s_cell) * static_cast<std::size_t>(cols()) +
           static_cast<std::size_t>(t_cell);
  }

  Depth depth_;
  std::vector<double> values_;
};

void validate_depth(const Depth& depth);
void require_same_depth(const Depth& a, const Depth& b);

GridFunction2D operator+(const GridFunction2D& a, const GridFunction2D& b);
GridFunction2D operator-(const GridFunction2D& a, const GridFunction2D& b);
GridFunction2D operator*(double c, const GridFunction2D& a);
GridFunction2D pointwise_product(const GridFunction2D& a, const GridFunction2D& b);
double inner_product(const GridFunction2D& a, const GridFunction2D& b);
double max_abs_difference(const GridFunction2D& a, const GridFunction2D& b);

/// Piecewise-constant refinement to a finer depth (values are preserved).
GridFunction2D refine(const GridFunction2D& f, Depth finer);

/// Indicator of the cells covered by a dyadic rectangle.
GridFunction2D indicator(const DyadicRect& r, Depth depth);

/// Averages over the blocks of generation k (side lengths 2^-k1 by 2^-k2).
/// This is the conditional expectation onto functions constant on those blocks.
GridFunction2D block_average(const GridFunction2D& f, GenerationIndex k);

}  // namespace dyadic
