#include "dyadic/grid.hpp"

#include <algorithm>
#include <cmath>

#include "dyadic/error.hpp"

namespace dyadic {

namespace {
constexpr int kMaxAxisDepth = 16;
constexpr int kMaxTotalDepth = 24;
}  // namespace

void validate_depth(const Depth& depth) {
  if (depth.s < 1 || depth.t < 1 || depth.s > kMaxAxisDepth || depth.t > kMaxAxisDepth ||
      depth.s + depth.t > kMaxTotalDepth) {
    throw ValidationError("unsupported depth " + to_string(depth));
  }
}

void require_same_depth(const Depth& a, const Depth& b) {
  if (a != b) throw ValidationError("depth mismatch: " + to_string(a) + " vs " + to_string(b));
}

GridFunction2D::GridFunction2D(Depth depth, std::vector<double> values)
    : depth_(depth), values_(std::move(values)) {
  validate_depth(depth_);
  if (values_.size() != static_cast<std::size_t>(depth_.cell_count())) {
    throw ValidationError("grid needs " + std::to_string(depth_.cell_count()) + " values, got " +
                          std::to_string(values_.size()));
  }
  if (!std::ranges::all_of(values_, [](double v) { return std::isfinite(v); })) {
    throw NonFiniteError("grid values must be finite");
  }
}

GridFunction2D GridFunction2D::zeros(Depth depth) { return constant(depth, 0.0); }

GridFunction2D GridFunction2D::constant(Depth depth, double value) {
  validate_depth(depth);
  return {depth, std::vector<double>(static_cast<std::size_t>(depth.cell_count()), value)};
}

double GridFunction2D::integral() const {
  double sum = 0.0;
  for (double v : values_) sum += v;
  return sum * depth_.cell_area();
}

double GridFunction2D::l2_norm_sq() const {
  double sum = 0.0;
  for (double v : values_) sum += v * v;
  return sum * depth_.cell_area();
}

namespace {
template <class Op>
GridFunction2D combine(const GridFunction2D& a, const GridFunction2D& b, Op op) {
  require_same_depth(a.depth(), b.depth());
  std::vector<double> out(a.values().size());
  std::ranges::transform(a.values(), b.values(), out.begin(), op);
  return {a.depth(), std::move(out)};
}
}  // namespace

GridFunction2D operator+(const GridFunction2D& a, const GridFunction2D& b) {
  return combine(a, b, std::plus<>{});
}

GridFunction2D operator-(const GridFunction2D& a, const GridFunction2D& b) {
  return combine(a, b, std::minus<>{});
}

GridFunction2D pointwise_product(const GridFunction2D& a, const GridFunction2D& b) {
  return combine(a, b, std::multiplies<>{});
}

GridFunction2D operator*(double c, const GridFunction2D& a) {
  std::vector<double> out(a.values().begin(), a.values().end());
  for (double& v : out) v *= c;
  return {a.depth(), std::move(out)};
}

double inner_product(const GridFunction2D& a, const GridFunction2D& b) {
  require_same_depth(a.depth(), b.depth());
  double sum = 0.0;
  for (std::size_t i = 0; i < a.values().size(); ++i) sum += a.values()[i] * b.values()[i];
  return sum * a.depth().cell_area();
}

double max_abs_difference(const GridFunction2D& a, const GridFunction2D& b) {
  require_same_depth(a.depth(), b.depth());
  double m = 0.0;
  for (std::size_t i = 0; i < a.values().size(); ++i) {
    m = std::max(m, std::abs(a.values()[i] - b.values()[i]));
  }
  return m;
}

GridFunction2D refine(const GridFunction2D& f, Depth finer) {
  validate_depth(finer);
  const Depth d = f.depth();
  if (finer.s < d.s || finer.t < d.t) {
    throw ValidationError("refinement target " + to_string(finer) + " is coarser than " +
                          to_string(d));
  }
  const int ds = finer.s - d.s;
  const int dt = finer.t - d.t;
  std::vector<double> out(static_cast<std::size_t>(finer.cell_count()));
  for (int i = 0; i < finer.cells_s(); ++i) {
    for (int j = 0; j < finer.cells_t(); ++j) {
      out[static_cast<std::size_t>(i) * finer.cells_t() + j] = f(i >> ds, j >> dt);
    }
  }
  return {finer, std::move(out)};
}

GridFunction2D indicator(const DyadicRect& r, Depth depth) {
  validate_depth(depth);
  if (r.s.level > depth.s || r.t.level > depth.t) {
    throw ValidationError("rectangle finer than grid depth " + to_string(depth));
  }
  std::vector<double> out(static_cast<std::size_t>(depth.cell_count()), 0.0);
  for (int i = r.s.first_cell(depth.s); i < r.s.end_cell(depth.s); ++i) {
    for (int j = r.t.first_cell(depth.t); j < r.t.end_cell(depth.t); ++j) {
      out[static_cast<std::size_t>(i) * depth.cells_t() + j] = 1.0;
    }
  }
  return {depth, std::move(out)};
}

GridFunction2D block_average(const GridFunction2D& f, GenerationIndex k) {
  const Depth d = f.depth();
  const int ks = std::clamp(k.j1, 0, d.s);
  const int kt = std::clamp(k.j2, 0, d.t);
  const int bs = 1 << (d.s - ks);
  const int bt = 1 << (d.t - kt);
  std::vector<double> out(f.values().size());
  for (int bi = 0; bi < (1 << ks); ++bi) {
    for (int bj = 0; bj < (1 << kt); ++bj) {
      double sum = 0.0;
      for (int i = bi * bs; i < (bi + 1) * bs; ++i) {
        for (int j = bj * bt; j < (bj + 1) * bt; ++j) sum += f(i, j);
      }
      const double mean = sum / static_cast<double>(bs * bt);
      for (int i = bi * bs; i < (bi + 1) * bs; ++i) {
        for (int j = bj * bt; j < (bj + 1) * bt; ++j) {
          out[static_cast<std::size_t>(i) * d.cells_t() + j] = mean;
        }
      }
    }
  }
  return {d, std::move(out)};
}

}  // namespace dyadic
