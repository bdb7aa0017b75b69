#pragma once

#include <array>
#include <string>

#include "dyadic/grid.hpp"
#include "dyadic/haar.hpp"

namespace dyadic {

/// Position of the output interval relative to the input interval along one axis.
/// COARSER covers strict ancestors together with the constant direction.
enum class Relation { finer, equal, coarser };

struct NinePartTag {
  Relation s;
  Relation t;

  friend bool operator==(const NinePartTag&, const NinePartTag&) = default;
};

/// All nine tags, (finer, finer) first, in s-major order.
std::array<NinePartTag, 9> all_nine_part_tags();

/// Short operator name: Pi, Delta, Pi01, Pi10, R_R, Pi_R, Delta_R, R_Pi, R_Delta.
std::string part_name(const NinePartTag& tag);
NinePartTag parse_part_name(const std::string& name);

/// The block of the multiplication operator f -> phi f selected by tag.
/// For phi and f in the hh-span the nine parts sum to the pointwise product.
GridFunction2D nine_part_apply(const NinePartTag& tag, const HaarSpectrum2D& phi, const GridFunction2D& f);

/// Literal evaluation of sum_{I,J} m_J(phi_I) f_{IJ} h_I(s) h_J(t)^2, the
/// alternative profile for the (coarser, equal) part. Kept for comparison.
GridFunction2D delta_r_alternative_apply(const HaarSpectrum2D& phi, const GridFunction2D& f);

}  // namespace dyadic
