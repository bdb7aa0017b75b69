#include "dyadic/haar.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "dyadic/error.hpp"

namespace dyadic {

HaarSpectrum2D::HaarSpectrum2D(Depth depth)
    : depth_(depth), coeffs_((validate_depth(depth), static_cast<std::size_t>(depth.cell_count())), 0.0) {}

HaarSpectrum2D::HaarSpectrum2D(Depth depth, std::vector<double> heap_matrix)
    : depth_(depth), coeffs_(std::move(heap_matrix)) {
  validate_depth(depth_);
  if (coeffs_.size() != static_cast<std::size_t>(depth_.cell_count())) {
    throw ValidationError("spectrum needs " + std::to_string(depth_.cell_count()) +
                          " coefficients, got " + std::to_string(coeffs_.size()));
  }
  if (!is_finite()) throw NonFiniteError("spectrum coefficients must be finite");
}

int HaarSpectrum2D::checked_s(const DyadicInterval& i) const {
  if (i.level >= depth_.s) throw ValidationError("interval level beyond spectrum depth in s");
  return i.heap();
}

int HaarSpectrum2D::checked_t(const DyadicInterval& j) const {
  if (j.level >= depth_.t) throw ValidationError("interval level beyond spectrum depth in t");
  return j.heap();
}

double HaarSpectrum2D::norm_sq() const {
  double sum = 0.0;
  for (double c : coeffs_) sum += c * c;
  return sum;
}

double HaarSpectrum2D::hh_norm_sq() const {
  double sum = 0.0;
  for (int p = 1; p < rows(); ++p) {
    for (int q = 1; q < cols(); ++q) sum += (*this)(p, q) * (*this)(p, q);
  }
  return sum;
}

HaarSpectrum2D HaarSpectrum2D::hh_part() const {
  HaarSpectrum2D out = *this;
  for (int q = 0; q < cols(); ++q) out(0, q) = 0.0;
  for (int p = 0; p < rows(); ++p) out(p, 0) = 0.0;
  return out;
}

bool HaarSpectrum2D::is_finite() const {
  return std::ranges::all_of(coeffs_, [](double c) { return std::isfinite(c); });
}

HaarSpectrum2D operator+(const HaarSpectrum2D& a, const HaarSpectrum2D& b) {
  require_same_depth(a.depth(), b.depth());
  std::vector<double> out(a.heap_matrix().size());
  std::ranges::transform(a.heap_matrix(), b.heap_matrix(), out.begin(), std::plus<>{});
  return {a.depth(), std::move(out)};
}

HaarSpectrum2D operator-(const HaarSpectrum2D& a, const HaarSpectrum2D& b) {
  require_same_depth(a.depth(), b.depth());
  std::vector<double> out(a.heap_matrix().size());
  std::ranges::transform(a.heap_matrix(), b.heap_matrix(), out.begin(), std::minus<>{});
  return {a.depth(), std::move(out)};
}

HaarSpectrum2D operator*(double c, const HaarSpectrum2D& a) {
  std::vector<double> out(a.heap_matrix().begin(), a.heap_matrix().end());
  for (double& v : out) v *= c;
  return {a.depth(), std::move(out)};
}

double inner_product(const HaarSpectrum2D& a, const HaarSpectrum2D& b) {
  require_same_depth(a.depth(), b.depth());
  double sum = 0.0;
  for (std::size_t i = 0; i < a.heap_matrix().size(); ++i) {
    sum += a.heap_matrix()[i] * b.heap_matrix()[i];
  }
  return sum;
}

double max_abs_difference(const HaarSpectrum2D& a, const HaarSpectrum2D& b) {
  require_same_depth(a.depth(), b.depth());
  double m = 0.0;
  for (std::size_t i = 0; i < a.heap_matrix().size(); ++i) {
    m = std::max(m, std::abs(a.heap_matrix()[i] - b.heap_matrix()[i]));
  }
  return m;
}

HaarSpectrum2D haar_basis(const DyadicRect& r, Depth depth) {
  HaarSpectrum2D c(depth);
  c.hh(r) = 1.0;
  return c;
}

namespace {

int depth_of_length(std::size_t n) {
  if (n == 0 || !std::has_single_bit(n)) throw ValidationError("length must be a power of two");
  return std::bit_width(n) - 1;
}

// 2^{l/2}
double level_scale(int level) { return std::ldexp(level % 2 ? std::numbers::sqrt2 : 1.0, level / 2); }

}  // namespace

void haar_forward_1d(std::span<double> values) {
  const std::size_t n = values.size();
  const int depth = depth_of_length(n);
  std::vector<double> sums(values.begin(), values.end());
  std::vector<double> out(n);
  const double inv_n = 1.0 / static_cast<double>(n);
  for (int level = depth - 1; level >= 0; --level) {
    const std::size_t count = std::size_t{1} << level;
    const double scale = level_scale(level) * inv_n;
    for (std::size_t i = 0; i < count; ++i) {
      const double left = sums[2 * i];
      const double right = sums[2 * i + 1];
      out[count + i] = scale * (right - left);
      sums[i] = left + right;
    }
  }
  out[0] = sums[0] * inv_n;
  std::ranges::copy(out, values.begin());
}

void haar_inverse_1d(std::span<double> coeffs) {
  const std::size_t n = coeffs.size();
  const int depth = depth_of_length(n);
  std::vector<double> cur{coeffs[0]};
  std::vector<double> next;
  for (int level = 0; level < depth; ++level) {
    const std::size_t count = std::size_t{1} << level;
    const double scale = level_scale(level);
    next.resize(2 * count);
    for (std::size_t i = 0; i < count; ++i) {
      const double d = coeffs[count + i] * scale;
      next[2 * i] = cur[i] - d;
      next[2 * i + 1] = cur[i] + d;
    }
    cur.swap(next);
  }
  std::ranges::copy(cur, coeffs.begin());
}

void normalized_indicator_synthesis_1d(std::span<double> coeffs) {
  const std::size_t n = coeffs.size();
  const int depth = depth_of_length(n);
  std::vector<double> cur{0.0};
  std::vector<double> next;
  for (int level = 0; level < depth; ++level) {
    const std::size_t count = std::size_t{1} << level;
    const double scale = std::ldexp(1.0, level);
    next.resize(2 * count);
    for (std::size_t i = 0; i < count; ++i) {
      const double v = cur[i] + coeffs[count + i] * scale;
      next[2 * i] = v;
      next[2 * i + 1] = v;
    }
    cur.swap(next);
  }
  std::ranges::copy(cur, coeffs.begin());
}

namespace {

// Applies `op` to every row (contiguous) of a rows x cols row-major matrix.
template <class Op>
void for_each_row(std::vector<double>& m, int rows, int cols, Op op) {
  for (int i = 0; i < rows; ++i) {
    op(std::span<double>(m.data() + static_cast<std::size_t>(i) * cols, static_cast<std::size_t>(cols)));
  }
}

// Applies `op` to every column via a gather/scatter buffer.
template <class Op>
void for_each_col(std::vector<double>& m, int rows, int cols, Op op) {
  std::vector<double> buf(static_cast<std::size_t>(rows));
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) buf[i] = m[static_cast<std::size_t>(i) * cols + j];
    op(std::span<double>(buf));
    for (int i = 0; i < rows; ++i) m[static_cast<std::size_t>(i) * cols + j] = buf[i];
  }
}

}  // namespace

HaarSpectrum2D haar_forward_2d(const GridFunction2D& f) {
  std::vector<double> m(f.values().begin(), f.values().end());
  for_each_row(m, f.rows(), f.cols(), haar_forward_1d);
  for_each_col(m, f.rows(), f.cols(), haar_forward_1d);
  return {f.depth(), std::move(m)};
}

GridFunction2D haar_inverse_2d(const HaarSpectrum2D& c) {
  std::vector<double> m(c.heap_matrix().begin(), c.heap_matrix().end());
  for_each_col(m, c.rows(), c.cols(), haar_inverse_1d);
  for_each_row(m, c.rows(), c.cols(), haar_inverse_1d);
  return {c.depth(), std::move(m)};
}

std::vector<double> partial_forward_t(const GridFunction2D& f) {
  std::vector<double> m(f.values().begin(), f.values().end());
  for_each_row(m, f.rows(), f.cols(), haar_forward_1d);
  return m;
}

std::vector<double> partial_forward_s(const GridFunction2D& f) {
  std::vector<double> m(f.values().begin(), f.values().end());
  for_each_col(m, f.rows(), f.cols(), haar_forward_1d);
  return m;
}

GridFunction2D separable_synthesis(Depth depth, std::span<const double> hh_heap_matrix,
                                   AxisKind s_kind, AxisKind t_kind) {
  validate_depth(depth);
  const int rows = depth.cells_s();
  const int cols = depth.cells_t();
  if (hh_heap_matrix.size() != static_cast<std::size_t>(rows * cols)) {
    throw ValidationError("coefficient matrix size does not match depth");
  }
  std::vector<double> m(hh_heap_matrix.begin(), hh_heap_matrix.end());
  for (int q = 0; q < cols; ++q) m[q] = 0.0;
  for (int p = 0; p < rows; ++p) m[static_cast<std::size_t>(p) * cols] = 0.0;
  auto synth = [](AxisKind kind) {
    return kind == AxisKind::haar ? haar_inverse_1d : normalized_indicator_synthesis_1d;
  };
  for_each_row(m, rows, cols, synth(t_kind));
  for_each_col(m, rows, cols, synth(s_kind));
  return {depth, std::move(m)};
}

}  // namespace dyadic
