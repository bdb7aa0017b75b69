#pragma once

#include <array>
#include <string>
#include <vector>

#include "dyadic/dense_operator.hpp"
#include "dyadic/grid.hpp"
#include "dyadic/haar.hpp"
#include "dyadic/nine_part.hpp"

namespace dyadic {

/// Source grid embedded two generations deeper in each axis so that two
/// nested shifts never reach the truncation level.
struct AmbientEmbedding {
  Depth source;
  Depth ambient;

  explicit AmbientEmbedding(Depth source_depth);

  GridFunction2D embed(const GridFunction2D& f) const;
  HaarSpectrum2D embed(const HaarSpectrum2D& c) const;
};

/// S h_I = h_{I+} - h_{I-} along one axis (1 = s, 2 = t), S 1 = 0.
/// Throws "insufficient depth headroom" if a finest-level coefficient is non-zero.
HaarSpectrum2D shift_apply(const HaarSpectrum2D& c, int axis);

/// Matrix of the shift truncated at `depth`: finest-level columns map to zero.
DenseOperator shift_operator(Depth depth, int axis);

/// [S1, [S2, M_phi]] b with M_phi pointwise multiplication, evaluated on the
/// ambient grid (source depth + 2 per axis).
GridFunction2D iterated_commutator_apply(const GridFunction2D& phi, const GridFunction2D& b);

/// [S1, [S2, P]] b for a linear map P acting on ambient-depth grids.
GridFunction2D iterated_commutator_apply(const GridMap& part, const GridFunction2D& b_ambient);

struct RrCommutatorTerms {
  /// m_{IJ} - m_{I^a J} - m_{I J^b} + m_{I^a J^b} for (a, b) in the order
  /// (+,+), (+,-), (-,+), (-,-).
  std::array<double, 4> brackets{};
  /// [S1, [S2, R_R phi]] h_R on the ambient depth; the coefficient of
  /// h_{I^a J^b} is the bracket times the product of the signs of a and b.
  HaarSpectrum2D image;
};

/// Closed form of the iterated commutator of the Haar-diagonal part on a
/// single basis function h_R, R a rectangle of the source grid.
RrCommutatorTerms rr_commutator_on_basis(const GridFunction2D& phi, const DyadicRect& r);

struct PartNormRow {
  std::string part;
  double commutator_norm = 0.0;  ///< sqrt of the BMO norm squared of the hh block
  std::string controlling_norm;
  double controlling_value = 0.0;
  double ratio = 0.0;            ///< commutator_norm / (controlling_value * ||b||_BMO)
};

/// For each of the nine parts P of M_phi: the BMO norm of [S1,[S2,P]] b next
/// to the symbol norm expected to control it.
std::vector<PartNormRow> commutator_part_norm_report(const GridFunction2D& phi, const GridFunction2D& b);

}  // namespace dyadic
