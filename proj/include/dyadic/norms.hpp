#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "dyadic/closure.hpp"
#include "dyadic/grid.hpp"
#include "dyadic/haar.hpp"

namespace dyadic {

/// Product dyadic BMO norm squared: max over cell unions Omega of
/// sum_{R inside Omega} |c_R|^2 / |Omega|, with an attaining Omega.
BmoResult bmo_d_norm_sq(const HaarSpectrum2D& c, std::optional<DyadicRect> restrict_to = std::nullopt);

/// Exhaustive version of bmo_d_norm_sq (at most 16 cells in the region).
double bmo_d_norm_sq_bruteforce(const HaarSpectrum2D& c, std::optional<DyadicRect> restrict_to = std::nullopt);

struct RectBmoResult {
  double norm_sq = 0.0;
  std::optional<DyadicRect> rect;
};

/// Rectangular BMO squared: max over dyadic R of sum_{Q inside R} |c_Q|^2 / |R|.
RectBmoResult bmo_rect_norm_sq(const HaarSpectrum2D& c);

/// max over generations j of (j1+1)(j2+1) ||Q_j c||_BMO.
double lmo_d_norm(const HaarSpectrum2D& c);

/// max over R = I x J of (log 4/|I|)^2 (log 4/|J|)^2 times the BMO norm squared
/// of c restricted to R (natural logarithm).
double lmo_char_norm(const HaarSpectrum2D& c);

/// max over levels i of (i+1) ||Q^(axis)_i c||_BMO, axis 1 = s, 2 = t.
double lmo_directional_norm(const HaarSpectrum2D& c, int axis);

/// Mixed form: an axis with beta = 1 uses the whole interval with weight 1,
/// an axis with beta = 0 ranges over all intervals with the log weight.
double lmo_beta_char_norm(const HaarSpectrum2D& c, std::array<int, 2> beta);

/// ||S[f]||_{L^1}.
double h1_norm(const GridFunction2D& f);

/// s(l) = log(1/l) + 1 for l <= 1, else 1.
double local_growth_factor(double length);

/// Axis-parallel rectangle [s0, s1) x [t0, t1) whose endpoints lie on the cell
/// lattice; it may extend beyond [0,1)^2, where functions are taken as zero.
struct LatticeRect {
  double s0, s1, t0, t1;
};

struct GrowthRow {
  LatticeRect rect;
  double growth = 0.0;       ///< s(R)
  double mean_ratio = 0.0;   ///< |m_R b| / (s(R) ||b||)
  double slice_ratio = 0.0;  ///< ||m_I b||_BMO(1D) / (s(I) ||b||)
  double local_ratio = 0.0;  ///< ||chi_R b||_2 / (s(R) |R|^{1/2} ||b||)
  double oscillation_ratio = 0.0;  ///< ||chi_I P_J b||_2 / (s(I) (|I||J|)^{1/2} ||b||)
  double average_ratio = 0.0;      ///< ||chi_I m_J b||_2 / (s(I) s(J) |I|^{1/2} ||b||)
};

/// Growth quantities of b over the given rectangles, normalized by s(.) and
/// the dyadic BMO norm of b's hh block. All ratios are 0 when that norm vanishes.
std::vector<GrowthRow> local_growth_report(const GridFunction2D& b, const std::vector<LatticeRect>& rects);

/// One-dimensional dyadic BMO norm squared of 2^depth samples on [0,1).
double bmo_1d_norm_sq(std::span<const double> values);

}  // namespace dyadic
