#include "dyadic/prefix_table.hpp"

#include "dyadic/error.hpp"

namespace dyadic {

PrefixTable::PrefixTable(int rows, int cols, std::span<const double> row_major)
    : rows_(rows), cols_(cols), table_(static_cast<std::size_t>(rows + 1) * (cols + 1), 0.0) {
  if (rows < 1 || cols < 1 || row_major.size() != static_cast<std::size_t>(rows) * cols) {
    throw ValidationError("prefix table shape mismatch");
  }
  for (int i = 0; i < rows; ++i) {
    double row_sum = 0.0;
    for (int j = 0; j < cols; ++j) {
      row_sum += row_major[static_cast<std::size_t>(i) * cols + j];
      table_[static_cast<std::size_t>(i + 1) * (cols + 1) + j + 1] = at(i, j + 1) + row_sum;
    }
  }
}

PrefixTable::PrefixTable(const GridFunction2D& f) : PrefixTable(f.rows(), f.cols(), f.values()) {}

double PrefixTable::sum(CellRange s, CellRange t) const {
  if (s.size() <= 0 || t.size() <= 0 || s.begin < 0 || t.begin < 0 || s.end > rows_ ||
      t.end > cols_) {
    throw ValidationError("degenerate rectangle");
  }
  return at(s.end, t.end) - at(s.begin, t.end) - at(s.end, t.begin) + at(s.begin, t.begin);
}

double PrefixTable::mean(CellRange s, CellRange t) const {
  return sum(s, t) / (static_cast<double>(s.size()) * static_cast<double>(t.size()));
}

double rect_mean(const PrefixTable& p, CellRange s, CellRange t) { return p.mean(s, t); }

double rect_mean(const PrefixTable& p, const DyadicRect& r, Depth depth) {
  return p.mean(CellRange::of(r.s, depth.s), CellRange::of(r.t, depth.t));
}

}  // namespace dyadic
