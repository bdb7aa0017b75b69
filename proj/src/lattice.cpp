#include "dyadic/lattice.hpp"

#include "dyadic/error.hpp"

namespace dyadic {

std::string to_string(const Depth& d) {
  return "(" + std::to_string(d.s) + "," + std::to_string(d.t) + ")";
}

DyadicInterval::DyadicInterval(int level_, std::int64_t index_) : level(level_), index(index_) {
  if (level < 0 || level > 62 || index < 0 || index >= (std::int64_t{1} << level)) {
    throw ValidationError("dyadic interval out of range: level " + std::to_string(level) +
                          ", index " + std::to_string(index));
  }
}

DyadicInterval DyadicInterval::from_heap(int heap) {
  if (heap < 1) throw ValidationError("heap index 0 is the constant, not an interval");
  const int level = heap_level(heap);
  return {level, heap - (1 << level)};
}

DyadicInterval DyadicInterval::parent() const {
  if (level == 0) throw ValidationError("[0,1) has no parent");
  return {level - 1, index / 2};
}

bool DyadicInterval::contains(const DyadicInterval& other) const noexcept {
  if (other.level < level) return false;
  return (other.index >> (other.level - level)) == index;
}

}  // namespace dyadic
