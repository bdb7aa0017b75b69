#include "dyadic/norms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dyadic/error.hpp"
#include "dyadic/projection.hpp"
#include "dyadic/square_function.hpp"

namespace dyadic {

BmoResult bmo_d_norm_sq(const HaarSpectrum2D& c, std::optional<DyadicRect> restrict_to) {
  return maximize_ratio(ClosureInstance(c, restrict_to));
}

double bmo_d_norm_sq_bruteforce(const HaarSpectrum2D& c, std::optional<DyadicRect> restrict_to) {
  return maximize_ratio_bruteforce(ClosureInstance(c, restrict_to)).norm_sq;
}

namespace {

template <class Fn>
void for_each_rect(Depth d, Fn fn) {
  for (int p = 1; p < d.cells_s(); ++p) {
    for (int q = 1; q < d.cells_t(); ++q) fn(DyadicRect{DyadicInterval::from_heap(p), DyadicInterval::from_heap(q)});
  }
}

double log_weight(int level) {
  const double w = (level + 2) * std::numbers::ln2;
  return w * w;
}

}  // namespace

RectBmoResult bmo_rect_norm_sq(const HaarSpectrum2D& c) {
  const Depth d = c.depth();
  RectBmoResult best;
  for_each_rect(d, [&](const DyadicRect& r) {
    double sum = 0.0;
    for_each_rect(d, [&](const DyadicRect& q) {
      if (r.contains(q)) sum += c.hh(q) * c.hh(q);
    });
    const double ratio = sum / r.area();
    if (ratio > best.norm_sq) best = {ratio, r};
  });
  return best;
}

double lmo_d_norm(const HaarSpectrum2D& c) {
  const Depth d = c.depth();
  double best = 0.0;
  for (int j1 = 0; j1 < d.s; ++j1) {
    for (int j2 = 0; j2 < d.t; ++j2) {
      const HaarSpectrum2D tail = apply_projection(c, projection::Q{{j1, j2}});
      best = std::max(best, (j1 + 1) * (j2 + 1) * std::sqrt(bmo_d_norm_sq(tail).norm_sq));
    }
  }
  return best;
}

double lmo_beta_char_norm(const HaarSpectrum2D& c, std::array<int, 2> beta) {
  for (int b : beta) {
    if (b != 0 && b != 1) throw ValidationError("beta entries must be 0 or 1");
  }
  const Depth d = c.depth();
  const int s_levels = beta[0] == 1 ? 1 : d.s;
  const int t_levels = beta[1] == 1 ? 1 : d.t;
  double best = 0.0;
  for (int ls = 0; ls < s_levels; ++ls) {
    for (int lt = 0; lt < t_levels; ++lt) {
      const double weight = (beta[0] == 1 ? 1.0 : log_weight(ls)) * (beta[1] == 1 ? 1.0 : log_weight(lt));
      for (int is = 0; is < (1 << ls); ++is) {
        for (int it = 0; it < (1 << lt); ++it) {
          const DyadicRect r{DyadicInterval(ls, is), DyadicInterval(lt, it)};
          best = std::max(best, weight * bmo_d_norm_sq(c, r).norm_sq);
        }
      }
    }
  }
  return best;
}

double lmo_char_norm(const HaarSpectrum2D& c) { return lmo_beta_char_norm(c, {0, 0}); }

double lmo_directional_norm(const HaarSpectrum2D& c, int axis) {
  if (axis != 1 && axis != 2) throw ValidationError("axis must be 1 or 2");
  const int levels = axis == 1 ? c.depth().s : c.depth().t;
  double best = 0.0;
  for (int i = 0; i < levels; ++i) {
    const HaarSpectrum2D tail = axis == 1 ? apply_projection(c, projection::Q1{i})
                                          : apply_projection(c, projection::Q2{i});
    best = std::max(best, (i + 1) * std::sqrt(bmo_d_norm_sq(tail).norm_sq));
  }
  return best;
}

double h1_norm(const GridFunction2D& f) { return square_function(haar_forward_2d(f)).integral(); }

double local_growth_factor(double length) {
  if (!(length > 0.0)) throw ValidationError("degenerate rectangle");
  return length <= 1.0 ? std::log(1.0 / length) + 1.0 : 1.0;
}

double bmo_1d_norm_sq(std::span<const double> values) {
  std::vector<double> c(values.begin(), values.end());
  haar_forward_1d(c);
  const int n = static_cast<int>(c.size());
  const int depth = heap_level(n);
  double best = 0.0;
  for (int q = 1; q < n; ++q) {
    const int level = heap_level(q);
    double sum = 0.0;
    for (int m = level; m < depth; ++m) {
      for (int k = q << (m - level); k < (q + 1) << (m - level); ++k) sum += c[k] * c[k];
    }
    best = std::max(best, sum * std::ldexp(1.0, level));
  }
  return best;
}

namespace {

// Cell index range [lo, hi) of a lattice interval, clipped to [0, cells).
struct Clip {
  int lo;
  int hi;
};

Clip clip_axis(double a, double b, int depth) {
  const double scale = std::ldexp(1.0, depth);
  const double fa = a * scale;
  const double fb = b * scale;
  if (!(fb > fa) || fa != std::round(fa) || fb != std::round(fb)) {
    throw ValidationError("degenerate rectangle");
  }
  const int cells = 1 << depth;
  const int lo = static_cast<int>(std::clamp(fa, 0.0, static_cast<double>(cells)));
  const int hi = static_cast<int>(std::clamp(fb, 0.0, static_cast<double>(cells)));
  return {lo, hi};
}

}  // namespace

std::vector<GrowthRow> local_growth_report(const GridFunction2D& b, const std::vector<LatticeRect>& rects) {
  const Depth d = b.depth();
  const double norm = std::sqrt(bmo_d_norm_sq(haar_forward_2d(b)).norm_sq);
  const double ws = std::ldexp(1.0, -d.s);
  const double wt = std::ldexp(1.0, -d.t);
  std::vector<GrowthRow> rows;
  for (const LatticeRect& r : rects) {
    const Clip cs = clip_axis(r.s0, r.s1, d.s);
    const Clip ct = clip_axis(r.t0, r.t1, d.t);
    const double len_i = r.s1 - r.s0;
    const double len_j = r.t1 - r.t0;
    const double s_i = local_growth_factor(len_i);
    const double s_j = local_growth_factor(len_j);
    GrowthRow row{r, s_i * s_j};
    if (norm == 0.0) {
      rows.push_back(row);
      continue;
    }
    double mass = 0.0;
    double energy = 0.0;
    for (int i = cs.lo; i < cs.hi; ++i) {
      for (int j = ct.lo; j < ct.hi; ++j) {
        mass += b(i, j) * ws * wt;
        energy += b(i, j) * b(i, j) * ws * wt;
      }
    }
    row.mean_ratio = std::abs(mass / (len_i * len_j)) / (row.growth * norm);
    row.local_ratio = std::sqrt(energy / (len_i * len_j)) / (row.growth * norm);

    // m_I b as a function of t on [0,1).
    std::vector<double> slice(static_cast<std::size_t>(d.cells_t()), 0.0);
    for (int j = 0; j < d.cells_t(); ++j) {
      for (int i = cs.lo; i < cs.hi; ++i) slice[static_cast<std::size_t>(j)] += b(i, j) * ws;
      slice[static_cast<std::size_t>(j)] /= len_i;
    }
    row.slice_ratio = std::sqrt(bmo_1d_norm_sq(slice)) / (s_i * norm);

    double oscillation = 0.0;
    double average = 0.0;
    const double inside_t = (ct.hi - ct.lo) * wt;
    for (int i = cs.lo; i < cs.hi; ++i) {
      double row_mass = 0.0;
      for (int j = ct.lo; j < ct.hi; ++j) row_mass += b(i, j) * wt;
      const double m = row_mass / len_j;
      double dev = m * m * (len_j - inside_t);
      for (int j = ct.lo; j < ct.hi; ++j) dev += (b(i, j) - m) * (b(i, j) - m) * wt;
      oscillation += dev * ws;
      average += m * m * ws;
    }
    row.oscillation_ratio = std::sqrt(oscillation / (len_i * len_j)) / (s_i * norm);
    row.average_ratio = std::sqrt(average / len_i) / (s_i * s_j * norm);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace dyadic
