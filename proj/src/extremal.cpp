#include "dyadic/extremal.hpp"

#include "dyadic/error.hpp"

namespace dyadic {

std::vector<double> ancestor_staircase(const DyadicInterval& i, int depth) {
  if (i.level > depth) throw ValidationError("interval lies beyond the grid depth");
  std::vector<double> out(static_cast<std::size_t>(1) << depth, 0.0);
  for (int m = 0; m <= i.level; ++m) {
    const DyadicInterval a(m, i.index >> (i.level - m));
    for (int cell = a.first_cell(depth); cell < a.end_cell(depth); ++cell) out[static_cast<std::size_t>(cell)] += 1.0;
  }
  return out;
}

GridFunction2D extremal_bmo_function(const DyadicRect& r, Depth depth) {
  validate_depth(depth);
  if (r.s.level > depth.s || r.t.level > depth.t) {
    throw ValidationError("rectangle lies beyond the grid depth " + to_string(depth));
  }
  const std::vector<double> b1 = ancestor_staircase(r.s, depth.s);
  const std::vector<double> b2 = ancestor_staircase(r.t, depth.t);
  std::vector<double> values;
  values.reserve(b1.size() * b2.size());
  for (double x : b1) {
    for (double y : b2) values.push_back(x * y);
  }
  return {depth, std::move(values)};
}

}  // namespace dyadic
