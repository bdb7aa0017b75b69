#pragma once

#include <span>
#include <vector>

#include "dyadic/grid.hpp"
#include "dyadic/lattice.hpp"

namespace dyadic {

enum class Block { cc, hc, ch, hh };

inline Block block_of(int p, int q) noexcept {
  if (p == 0) return q == 0 ? Block::cc : Block::ch;
  return q == 0 ? Block::hc : Block::hh;
}

/// Coefficients over the tensor Haar basis {1, h_I} x {1, h_J}.
/// Stored as a 2^s x 2^t matrix indexed by heap numbers (p, q): p = 0 is the
/// constant in s, p = 2^level + index is h_I; likewise q in t.
class HaarSpectrum2D {
 public:
  explicit HaarSpectrum2D(Depth depth);
  HaarSpectrum2D(Depth depth, std::vector<double> heap_matrix);

  Depth depth() const noexcept { return depth_; }
  int rows() const noexcept { return depth_.cells_s(); }
  int cols() const noexcept { return depth_.cells_t(); }

  double operator()(int p, int q) const { return coeffs_[index(p, q)]; }
  double& operator()(int p, int q) { return coeffs_[index(p, q)]; }
  std::span<const double> heap_matrix() const noexcept { return coeffs_; }

  double cc() const { return coeffs_[0]; }
  double hc(const DyadicInterval& i) const { return (*this)(checked_s(i), 0); }
  double ch(const DyadicInterval& j) const { return (*this)(0, checked_t(j)); }
  double hh(const DyadicRect& r) const { return (*this)(checked_s(r.s), checked_t(r.t)); }
  double& hh(const DyadicRect& r) { return (*this)(checked_s(r.s), checked_t(r.t)); }

  double norm_sq() const;
  double hh_norm_sq() const;
  /// Copy with the cc, hc and ch blocks zeroed.
  HaarSpectrum2D hh_part() const;
  bool is_finite() const;

  friend bool operator==(const HaarSpectrum2D&, const HaarSpectrum2D&) = default;

 private:
  std::size_t index(int p, int q) const noexcept {
    return static_cast<std::size_t>(p) * static_cast<std::size_t>(cols()) +
           static_cast<std::size_t>(q);
  }
  int checked_s(const DyadicInterval& i) const;
  int checked_t(const DyadicInterval& j) const;

  Depth depth_;
  std::vector<double> coeffs_;
};

HaarSpectrum2D operator+(const HaarSpectrum2D& a, const HaarSpectrum2D& b);
HaarSpectrum2D operator-(const HaarSpectrum2D& a, const HaarSpectrum2D& b);
HaarSpectrum2D operator*(double c, const HaarSpectrum2D& a);
double inner_product(const HaarSpectrum2D& a, const HaarSpectrum2D& b);
double max_abs_difference(const HaarSpectrum2D& a, const HaarSpectrum2D& b);

/// Spectrum with a single unit coefficient at h_R.
HaarSpectrum2D haar_basis(const DyadicRect& r, Depth depth);

/// In-place 1D transforms on 2^depth samples (heap-ordered coefficients).
void haar_forward_1d(std::span<double> values);
void haar_inverse_1d(std::span<double> coeffs);

/// 1D synthesis of sum_I c_I chi_I / |I| over heap indices > 0 (c_0 is ignored).
void normalized_indicator_synthesis_1d(std::span<double> coeffs);

HaarSpectrum2D haar_forward_2d(const GridFunction2D& f);
GridFunction2D haar_inverse_2d(const HaarSpectrum2D& c);

/// Transform along t only: entry (s_cell, q) is the q-th Haar coefficient of f(s, .).
std::vector<double> partial_forward_t(const GridFunction2D& f);
/// Transform along s only: entry (p, t_cell) is the p-th Haar coefficient of f(., t).
std::vector<double> partial_forward_s(const GridFunction2D& f);

/// Output profile of one axis in a separable synthesis.
enum class AxisKind {
  haar,       ///< h_I
  indicator,  ///< h_I^2 = chi_I / |I|
};

/// Evaluates sum_{p,q} A(p,q) u_p(s) v_q(t) on the grid, where u, v are the
/// chosen profiles. A is heap-indexed; only its hh block is used.
GridFunction2D separable_synthesis(Depth depth, std::span<const double> hh_heap_matrix,
                                   AxisKind s_kind, AxisKind t_kind);

}  // namespace dyadic
