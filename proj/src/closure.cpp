#include "dyadic/closure.hpp"

#include <bit>
#include <cstdint>

#include "dyadic/error.hpp"
#include "dyadic/max_flow.hpp"

namespace dyadic {

ClosureInstance::ClosureInstance(const HaarSpectrum2D& c, std::optional<DyadicRect> restrict_to)
    : depth_(c.depth()) {
  const DyadicRect whole{DyadicInterval(0, 0), DyadicInterval(0, 0)};
  const DyadicRect region = restrict_to.value_or(whole);
  if (region.s.level > depth_.s || region.t.level > depth_.t) {
    throw ValidationError("restriction rectangle lies beyond the grid depth");
  }
  std::vector<int> local(static_cast<std::size_t>(depth_.cell_count()), -1);
  for (int i = region.s.first_cell(depth_.s); i < region.s.end_cell(depth_.s); ++i) {
    for (int j = region.t.first_cell(depth_.t); j < region.t.end_cell(depth_.t); ++j) {
      const int id = i * depth_.cells_t() + j;
      local[static_cast<std::size_t>(id)] = static_cast<int>(cell_ids_.size());
      cell_ids_.push_back(id);
    }
  }
  for (int p = 1; p < c.rows(); ++p) {
    for (int q = 1; q < c.cols(); ++q) {
      const double w = c(p, q) * c(p, q);
      if (w == 0.0) continue;
      const DyadicRect r{DyadicInterval::from_heap(p), DyadicInterval::from_heap(q)};
      if (!region.contains(r)) continue;
      Rect entry{r, w, {}};
      for (int i = r.s.first_cell(depth_.s); i < r.s.end_cell(depth_.s); ++i) {
        for (int j = r.t.first_cell(depth_.t); j < r.t.end_cell(depth_.t); ++j) {
          entry.cells.push_back(local[static_cast<std::size_t>(i * depth_.cells_t() + j)]);
        }
      }
      total_weight_ += w;
      rects_.push_back(std::move(entry));
    }
  }
}

double ClosureInstance::objective(const std::vector<char>& selected) const {
  int count = 0;
  for (char s : selected) count += s ? 1 : 0;
  if (count == 0) return 0.0;
  double sum = 0.0;
  for (const Rect& r : rects_) {
    bool inside = true;
    for (int cell : r.cells) {
      if (!selected[static_cast<std::size_t>(cell)]) {
        inside = false;
        break;
      }
    }
    if (inside) sum += r.weight;
  }
  return sum / (count * cell_area());
}

CellMask ClosureInstance::to_mask(const std::vector<char>& selected) const {
  CellMask mask = CellMask::empty(depth_);
  for (int k = 0; k < cell_count(); ++k) {
    if (selected[static_cast<std::size_t>(k)]) mask.cells[static_cast<std::size_t>(global_cell(k))] = 1;
  }
  return mask;
}

namespace {

// Cells of the maximum-profit closure for sum w_R - lambda |Omega|.
std::vector<char> best_closure(const ClosureInstance& inst, double lambda) {
  const int n_rects = static_cast<int>(inst.rects().size());
  const int n_cells = inst.cell_count();
  const int source = 0;
  const int sink = 1;
  const int rect0 = 2;
  const int cell0 = rect0 + n_rects;
  MaxFlow flow(cell0 + n_cells);
  const double infinite = inst.total_weight() + 1.0;
  for (int r = 0; r < n_rects; ++r) {
    const auto& rect = inst.rects()[static_cast<std::size_t>(r)];
    flow.add_edge(source, rect0 + r, rect.weight);
    for (int cell : rect.cells) flow.add_edge(rect0 + r, cell0 + cell, infinite);
  }
  const double cell_cost = lambda * inst.cell_area();
  for (int k = 0; k < n_cells; ++k) flow.add_edge(cell0 + k, sink, cell_cost);
  flow.solve(source, sink);
  const std::vector<char> side = flow.source_side(source);
  return {side.begin() + cell0, side.end()};
}

}  // namespace

BmoResult maximize_ratio(const ClosureInstance& instance) {
  if (instance.rects().empty()) return {0.0, CellMask::empty(instance.depth()), 0};
  // Start from the union of all supports.
  std::vector<char> omega(static_cast<std::size_t>(instance.cell_count()), 0);
  for (const auto& r : instance.rects()) {
    for (int cell : r.cells) omega[static_cast<std::size_t>(cell)] = 1;
  }
  double lambda = instance.objective(omega);
  int iterations = 0;
  constexpr int kMaxIterations = 10000;
  while (iterations < kMaxIterations) {
    ++iterations;
    std::vector<char> candidate = best_closure(instance, lambda);
    const double g = instance.objective(candidate);
    if (!(g > lambda * (1.0 + 1e-13))) break;
    lambda = g;
    omega = std::move(candidate);
  }
  if (iterations >= kMaxIterations) {
    throw NonConvergenceError("ratio maximization did not terminate", lambda);
  }
  return {lambda, instance.to_mask(omega), iterations};
}

BmoResult maximize_ratio_bruteforce(const ClosureInstance& instance) {
  const int n = instance.cell_count();
  if (n > 16) throw ValidationError("too many cells for exhaustive search (" + std::to_string(n) + " > 16)");
  std::vector<std::uint32_t> masks;
  std::vector<double> weights;
  for (const auto& r : instance.rects()) {
    std::uint32_t m = 0;
    for (int cell : r.cells) m |= std::uint32_t{1} << cell;
    masks.push_back(m);
    weights.push_back(r.weight);
  }
  double best = 0.0;
  std::uint32_t best_set = 0;
  const std::uint32_t all = n == 32 ? ~0u : (std::uint32_t{1} << n);
  for (std::uint32_t set = 1; set < all; ++set) {
    double sum = 0.0;
    for (std::size_t k = 0; k < masks.size(); ++k) {
      if ((masks[k] & ~set) == 0) sum += weights[k];
    }
    const double ratio = sum / (std::popcount(set) * instance.cell_area());
    if (ratio > best) {
      best = ratio;
      best_set = set;
    }
  }
  std::vector<char> selected(static_cast<std::size_t>(n), 0);
  for (int k = 0; k < n; ++k) selected[static_cast<std::size_t>(k)] = (best_set >> k) & 1u;
  return {best, instance.to_mask(selected), 0};
}

}  // namespace dyadic
