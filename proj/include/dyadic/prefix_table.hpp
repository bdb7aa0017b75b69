#pragma once

#include <span>
#include <vector>

#include "dyadic/grid.hpp"

namespace dyadic {

/// Half-open range of cell indices [begin, end).
struct CellRange {
  int begin = 0;
  int end = 0;

  int size() const noexcept { return end - begin; }
  static CellRange of(const DyadicInterval& i, int depth) { return {i.first_cell(depth), i.end_cell(depth)}; }
};

/// Summed-area table over a rows x cols matrix, with a zero guard row and column.
class PrefixTable {
 public:
  PrefixTable(int rows, int cols, std::span<const double> row_major);
  explicit PrefixTable(const GridFunction2D& f);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  double sum(CellRange s, CellRange t) const;
  /// Average over the block; throws "degenerate rectangle" on empty or out-of-range input.
  double mean(CellRange s, CellRange t) const;

 private:
  double at(int i, int j) const noexcept {
    return table_[static_cast<std::size_t>(i) * (cols_ + 1) + j];
  }

  int rows_;
  int cols_;
  std::vector<double> table_;
};

double rect_mean(const PrefixTable& p, CellRange s, CellRange t);

/// m_R f for a dyadic rectangle, f on a grid of depth `depth`.
double rect_mean(const PrefixTable& p, const DyadicRect& r, Depth depth);

}  // namespace dyadic
