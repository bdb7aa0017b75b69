#pragma once

#include <vector>

#include "dyadic/grid.hpp"
#include "dyadic/lattice.hpp"

namespace dyadic {

/// Staircase sum of the indicators of I and all its dyadic ancestors, sampled
/// on 2^depth cells. It equals level(I) + 1 on I.
std::vector<double> ancestor_staircase(const DyadicInterval& i, int depth);

/// b = b1 (x) b2 with the staircases of R's sides; b is (k+1)(l+1) on R while
/// its dyadic BMO norm stays bounded independently of R.
GridFunction2D extremal_bmo_function(const DyadicRect& r, Depth depth);

}  // namespace dyadic
