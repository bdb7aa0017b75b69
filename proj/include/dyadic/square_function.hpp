#pragma once

#include "dyadic/grid.hpp"
#include "dyadic/haar.hpp"

namespace dyadic {

/// S^2[f] = sum_R |f_R|^2 chi_R / |R| over the hh block.
GridFunction2D square_function_sq(const HaarSpectrum2D& c);

/// S[f], the pointwise square root of square_function_sq.
GridFunction2D square_function(const HaarSpectrum2D& c);

}  // namespace dyadic
