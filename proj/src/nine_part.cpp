#include "dyadic/nine_part.hpp"

#include "dyadic/error.hpp"
#include "dyadic/paraproduct.hpp"

namespace dyadic {

std::array<NinePartTag, 9> all_nine_part_tags() {
  std::array<NinePartTag, 9> out{};
  const std::array rel{Relation::finer, Relation::equal, Relation::coarser};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) out[3 * i + j] = {rel[i], rel[j]};
  }
  return out;
}

namespace {

struct NamedTag {
  NinePartTag tag;
  const char* name;
};

constexpr std::array<NamedTag, 9> kNames{{
    {{Relation::finer, Relation::finer}, "Pi"},
    {{Relation::coarser, Relation::coarser}, "Delta"},
    {{Relation::finer, Relation::coarser}, "Pi01"},
    {{Relation::coarser, Relation::finer}, "Pi10"},
    {{Relation::equal, Relation::equal}, "R_R"},
    {{Relation::finer, Relation::equal}, "Pi_R"},
    {{Relation::coarser, Relation::equal}, "Delta_R"},
    {{Relation::equal, Relation::finer}, "R_Pi"},
    {{Relation::equal, Relation::coarser}, "R_Delta"},
}};

std::vector<double> product(std::vector<double> a, std::span<const double> b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] *= b[i];
  return a;
}

std::vector<double> coefficients(const HaarSpectrum2D& c) {
  return {c.heap_matrix().begin(), c.heap_matrix().end()};
}

}  // namespace

std::string part_name(const NinePartTag& tag) {
  for (const auto& n : kNames) {
    if (n.tag == tag) return n.name;
  }
  return "?";
}

NinePartTag parse_part_name(const std::string& name) {
  for (const auto& n : kNames) {
    if (name == n.name) return n.tag;
  }
  throw ValidationError("unknown part '" + name + "'");
}

GridFunction2D nine_part_apply(const NinePartTag& tag, const HaarSpectrum2D& phi, const GridFunction2D& f) {
  require_same_depth(phi.depth(), f.depth());
  using enum Relation;
  if (tag == NinePartTag{finer, finer}) return paraproduct(Signature::pi(), phi, f);
  if (tag == NinePartTag{coarser, coarser}) return paraproduct(Signature::delta_type(), phi, f);
  if (tag == NinePartTag{finer, coarser}) return paraproduct(Signature::mixed01(), phi, f);
  if (tag == NinePartTag{coarser, finer}) return paraproduct(Signature::mixed10(), phi, f);

  const Depth d = f.depth();
  const GridFunction2D phi_grid = haar_inverse_2d(phi);
  std::vector<double> a;
  AxisKind s_kind = AxisKind::haar;
  AxisKind t_kind = AxisKind::haar;
  if (tag == NinePartTag{equal, equal}) {
    a = product(means::rect(phi_grid), coefficients(haar_forward_2d(f)));
  } else if (tag == NinePartTag{finer, equal}) {
    a = product(means::t_avg_of_s_coeff(phi_grid), means::s_avg_of_t_coeff(f));
  } else if (tag == NinePartTag{coarser, equal}) {
    a = product(means::t_avg_of_s_coeff(phi_grid), coefficients(haar_forward_2d(f)));
    s_kind = AxisKind::indicator;
  } else if (tag == NinePartTag{equal, finer}) {
    a = product(means::s_avg_of_t_coeff(phi_grid), means::t_avg_of_s_coeff(f));
  } else {
    a = product(means::s_avg_of_t_coeff(phi_grid), coefficients(haar_forward_2d(f)));
    t_kind = AxisKind::indicator;
  }
  return separable_synthesis(d, a, s_kind, t_kind);
}

GridFunction2D delta_r_alternative_apply(const HaarSpectrum2D& phi, const GridFunction2D& f) {
  require_same_depth(phi.depth(), f.depth());
  const std::vector<double> a =
      product(means::t_avg_of_s_coeff(haar_inverse_2d(phi)), coefficients(haar_forward_2d(f)));
  return separable_synthesis(f.depth(), a, AxisKind::haar, AxisKind::indicator);
}

}  // namespace dyadic
