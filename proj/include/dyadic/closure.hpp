#pragma once

#include <optional>
#include <vector>

#include "dyadic/haar.hpp"
#include "dyadic/projection.hpp"

namespace dyadic {

/// Weighted rectangles over fine-grid cells: the data of the ratio
/// max over Omega of sum_{R inside Omega} w_R / |Omega|.
class ClosureInstance {
 public:
  struct Rect {
    DyadicRect rect;
    double weight;
    std::vector<int> cells;  ///< local cell indices
  };

  /// Rectangles carry w_R = |c_R|^2 from the hh block; with `restrict_to`,
  /// only cells and rectangles inside that rectangle take part.
  ClosureInstance(const HaarSpectrum2D& c, std::optional<DyadicRect> restrict_to = std::nullopt);

  Depth depth() const noexcept { return depth_; }
  int cell_count() const noexcept { return static_cast<int>(cell_ids_.size()); }
  double cell_area() const noexcept { return depth_.cell_area(); }
  const std::vector<Rect>& rects() const noexcept { return rects_; }
  /// Global (row-major) id of a local cell.
  int global_cell(int local) const { return cell_ids_[static_cast<std::size_t>(local)]; }
  double total_weight() const noexcept { return total_weight_; }

  /// g(Omega) for a local cell selection; 0 for the empty set.
  double objective(const std::vector<char>& selected) const;
  CellMask to_mask(const std::vector<char>& selected) const;

 private:
  Depth depth_;
  std::vector<int> cell_ids_;
  std::vector<Rect> rects_;
  double total_weight_ = 0.0;
};

struct BmoResult {
  double norm_sq = 0.0;
  /// Attaining set; empty when the hh block vanishes.
  CellMask omega;
  int iterations = 0;
};

/// Exact maximization by Dinkelbach iteration over minimum cuts.
BmoResult maximize_ratio(const ClosureInstance& instance);

/// Exhaustive maximization over all non-empty cell subsets (at most 16 cells).
BmoResult maximize_ratio_bruteforce(const ClosureInstance& instance);

}  // namespace dyadic
