#include "dyadic/projection.hpp"

#include <algorithm>

#include "dyadic/error.hpp"

namespace dyadic {

CellMask CellMask::empty(Depth depth) {
  return {depth, std::vector<std::uint8_t>(static_cast<std::size_t>(depth.cell_count()), 0)};
}

CellMask CellMask::of(const DyadicRect& r, Depth depth) {
  CellMask m = empty(depth);
  for (int i = r.s.first_cell(depth.s); i < r.s.end_cell(depth.s); ++i) {
    for (int j = r.t.first_cell(depth.t); j < r.t.end_cell(depth.t); ++j) {
      m.cells[static_cast<std::size_t>(i) * depth.cells_t() + j] = 1;
    }
  }
  return m;
}

bool CellMask::contains(const DyadicRect& r) const {
  for (int i = r.s.first_cell(depth.s); i < r.s.end_cell(depth.s); ++i) {
    for (int j = r.t.first_cell(depth.t); j < r.t.end_cell(depth.t); ++j) {
      if (!contains(i, j)) return false;
    }
  }
  return true;
}

int CellMask::count() const {
  return static_cast<int>(std::ranges::count_if(cells, [](std::uint8_t c) { return c != 0; }));
}

namespace {

bool in_band(int level, int n) {
  const int lo = (1 << n) - 1;
  return level >= lo && level <= 2 * lo;
}

struct Keeps {
  const DyadicRect& r;
  int l1() const { return r.s.level; }
  int l2() const { return r.t.level; }

  bool operator()(const projection::Delta& p) const { return l1() == p.j.j1 && l2() == p.j.j2; }
  bool operator()(const projection::E& p) const { return l1() < p.j.j1 && l2() < p.j.j2; }
  bool operator()(const projection::Q& p) const { return l1() >= p.j.j1 && l2() >= p.j.j2; }
  bool operator()(const projection::E1& p) const { return l1() < p.i; }
  bool operator()(const projection::Q1& p) const { return l1() >= p.i; }
  bool operator()(const projection::E2& p) const { return l2() < p.j; }
  bool operator()(const projection::Q2& p) const { return l2() >= p.j; }
  bool operator()(const projection::Band& p) const { return in_band(l1(), p.n) && in_band(l2(), p.k); }
  bool operator()(const projection::TailBand& p) const {
    return l1() >= (1 << p.n) - 1 && l2() >= (1 << p.k) - 1;
  }
  bool operator()(const projection::OpenSet& p) const { return p.mask.contains(r); }
};

}  // namespace

bool keeps(const ProjectionSelector& sel, const DyadicRect& r) { return std::visit(Keeps{r}, sel); }

HaarSpectrum2D apply_projection(const HaarSpectrum2D& c, const ProjectionSelector& sel) {
  if (const auto* open = std::get_if<projection::OpenSet>(&sel)) {
    require_same_depth(open->mask.depth, c.depth());
  }
  HaarSpectrum2D out(c.depth());
  for (int p = 1; p < c.rows(); ++p) {
    for (int q = 1; q < c.cols(); ++q) {
      const DyadicRect r{DyadicInterval::from_heap(p), DyadicInterval::from_heap(q)};
      if (keeps(sel, r)) out(p, q) = c(p, q);
    }
  }
  return out;
}

HaarSpectrum2D conditional_expectation(const HaarSpectrum2D& c, GenerationIndex k) {
  HaarSpectrum2D out(c.depth());
  for (int p = 0; p < c.rows(); ++p) {
    for (int q = 0; q < c.cols(); ++q) {
      const bool s_ok = p == 0 || heap_level(p) < k.j1;
      const bool t_ok = q == 0 || heap_level(q) < k.j2;
      if (s_ok && t_ok) out(p, q) = c(p, q);
    }
  }
  return out;
}

}  // namespace dyadic
