#include "dyadic/square_function.hpp"

#include <algorithm>
#include <cmath>

namespace dyadic {

GridFunction2D square_function_sq(const HaarSpectrum2D& c) {
  std::vector<double> w(c.heap_matrix().begin(), c.heap_matrix().end());
  for (double& v : w) v *= v;
  return separable_synthesis(c.depth(), w, AxisKind::indicator, AxisKind::indicator);
}

GridFunction2D square_function(const HaarSpectrum2D& c) {
  const GridFunction2D sq = square_function_sq(c);
  std::vector<double> out(sq.values().begin(), sq.values().end());
  for (double& v : out) v = std::sqrt(std::max(v, 0.0));
  return {c.depth(), std::move(out)};
}

}  // namespace dyadic
