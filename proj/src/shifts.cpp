#include "dyadic/shifts.hpp"

#include <algorithm>
#include <cmath>

#include "dyadic/error.hpp"
#include "dyadic/norms.hpp"
#include "dyadic/prefix_table.hpp"

namespace dyadic {

AmbientEmbedding::AmbientEmbedding(Depth source_depth)
    : source(source_depth), ambient{source_depth.s + 2, source_depth.t + 2} {
  validate_depth(source);
  validate_depth(ambient);
}

GridFunction2D AmbientEmbedding::embed(const GridFunction2D& f) const {
  require_same_depth(f.depth(), source);
  return refine(f, ambient);
}

HaarSpectrum2D AmbientEmbedding::embed(const HaarSpectrum2D& c) const {
  require_same_depth(c.depth(), source);
  HaarSpectrum2D out(ambient);
  for (int p = 0; p < c.rows(); ++p) {
    for (int q = 0; q < c.cols(); ++q) out(p, q) = c(p, q);
  }
  return out;
}

namespace {

void check_axis(int axis) {
  if (axis != 1 && axis != 2) throw ValidationError("axis must be 1 or 2");
}

}  // namespace

HaarSpectrum2D shift_apply(const HaarSpectrum2D& c, int axis) {
  check_axis(axis);
  const Depth d = c.depth();
  HaarSpectrum2D out(d);
  const int finest = axis == 1 ? d.s - 1 : d.t - 1;
  for (int p = 0; p < c.rows(); ++p) {
    for (int q = 0; q < c.cols(); ++q) {
      const double v = c(p, q);
      const int h = axis == 1 ? p : q;
      if (v == 0.0 || h == 0) continue;
      if (heap_level(h) >= finest) throw ValidationError("insufficient depth headroom");
      if (axis == 1) {
        out(2 * p + 1, q) += v;
        out(2 * p, q) -= v;
      } else {
        out(p, 2 * q + 1) += v;
        out(p, 2 * q) -= v;
      }
    }
  }
  return out;
}

DenseOperator shift_operator(Depth depth, int axis) {
  check_axis(axis);
  const BasisOrder order(depth);
  const int finest = axis == 1 ? depth.s - 1 : depth.t - 1;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(order.size(), order.size());
  for (int k = 0; k < order.size(); ++k) {
    const auto [p, q] = order.heap_pair(k);
    const int h = axis == 1 ? p : q;
    if (h == 0 || heap_level(h) >= finest) continue;
    if (axis == 1) {
      m(order.position(2 * p + 1, q), k) = 1.0;
      m(order.position(2 * p, q), k) = -1.0;
    } else {
      m(order.position(p, 2 * q + 1), k) = 1.0;
      m(order.position(p, 2 * q), k) = -1.0;
    }
  }
  return {depth, std::move(m)};
}

namespace {

// Grid round trips leave roundoff at the finest level; only values above
// this fraction of the largest coefficient count as content there.
constexpr double kFinestRoundoff = 1e-12;

GridFunction2D shift_grid(const GridFunction2D& f, int axis) {
  HaarSpectrum2D c = haar_forward_2d(f);
  double scale = 0.0;
  for (int p = 0; p < c.rows(); ++p) {
    for (int q = 0; q < c.cols(); ++q) scale = std::max(scale, std::abs(c(p, q)));
  }
  const int finest = axis == 1 ? c.depth().s - 1 : c.depth().t - 1;
  for (int p = 0; p < c.rows(); ++p) {
    for (int q = 0; q < c.cols(); ++q) {
      const int h = axis == 1 ? p : q;
      if (h > 0 && heap_level(h) == finest && std::abs(c(p, q)) <= kFinestRoundoff * scale) c(p, q) = 0.0;
    }
  }
  return haar_inverse_2d(shift_apply(c, axis));
}

}  // namespace

GridFunction2D iterated_commutator_apply(const GridMap& part, const GridFunction2D& b) {
  const GridFunction2D s2b = shift_grid(b, 2);
  const GridFunction2D s1b = shift_grid(b, 1);
  const GridFunction2D t1 = shift_grid(shift_grid(part(b), 2), 1);
  const GridFunction2D t2 = shift_grid(part(s2b), 1);
  const GridFunction2D t3 = shift_grid(part(s1b), 2);
  const GridFunction2D t4 = part(shift_grid(s1b, 2));
  return t1 - t2 - t3 + t4;
}

GridFunction2D iterated_commutator_apply(const GridFunction2D& phi, const GridFunction2D& b) {
  require_same_depth(phi.depth(), b.depth());
  const AmbientEmbedding amb(phi.depth());
  const GridFunction2D phi_amb = amb.embed(phi);
  return iterated_commutator_apply([&](const GridFunction2D& g) { return pointwise_product(phi_amb, g); },
                                   amb.embed(b));
}

RrCommutatorTerms rr_commutator_on_basis(const GridFunction2D& phi, const DyadicRect& r) {
  const Depth src = phi.depth();
  if (r.s.level >= src.s || r.t.level >= src.t) throw ValidationError("insufficient depth headroom");
  const AmbientEmbedding amb(src);
  const PrefixTable table(phi);
  const auto mean = [&](const DyadicInterval& i, const DyadicInterval& j) {
    return rect_mean(table, DyadicRect{i, j}, src);
  };
  const std::array<DyadicInterval, 2> s_child{r.s.right(), r.s.left()};
  const std::array<DyadicInterval, 2> t_child{r.t.right(), r.t.left()};
  RrCommutatorTerms out{{}, HaarSpectrum2D(amb.ambient)};
  const double m_r = mean(r.s, r.t);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const DyadicInterval& ia = s_child[a];
      const DyadicInterval& jb = t_child[b];
      const double bracket = m_r - mean(ia, r.t) - mean(r.s, jb) + mean(ia, jb);
      out.brackets[2 * a + b] = bracket;
      const double sign = (a == b) ? 1.0 : -1.0;
      out.image.hh(DyadicRect{ia, jb}) = sign * bracket;
    }
  }
  return out;
}

std::vector<PartNormRow> commutator_part_norm_report(const GridFunction2D& phi, const GridFunction2D& b) {
  require_same_depth(phi.depth(), b.depth());
  const AmbientEmbedding amb(phi.depth());
  const HaarSpectrum2D phi_c = haar_forward_2d(phi);
  const HaarSpectrum2D phi_amb = haar_forward_2d(amb.embed(phi));
  const GridFunction2D b_amb = amb.embed(b);
  const double b_norm = std::sqrt(bmo_d_norm_sq(haar_forward_2d(b)).norm_sq);

  const double lmo = lmo_d_norm(phi_c);
  const double bmo = std::sqrt(bmo_d_norm_sq(phi_c).norm_sq);
  const double lmo1 = lmo_directional_norm(phi_c, 1);
  const double lmo2 = lmo_directional_norm(phi_c, 2);
  const double rect = std::sqrt(bmo_rect_norm_sq(phi_c).norm_sq);

  std::vector<PartNormRow> rows;
  for (const NinePartTag& tag : all_nine_part_tags()) {
    const std::string name = part_name(tag);
    PartNormRow row;
    row.part = name;
    if (name == "Pi") {
      row.controlling_norm = "lmo";
      row.controlling_value = lmo;
    } else if (name == "Delta" || name == "Delta_R" || name == "R_Delta") {
      row.controlling_norm = "bmo";
      row.controlling_value = bmo;
    } else if (name == "Pi01" || name == "Pi_R") {
      row.controlling_norm = "lmo1";
      row.controlling_value = lmo1;
    } else if (name == "Pi10" || name == "R_Pi") {
      row.controlling_norm = "lmo2";
      row.controlling_value = lmo2;
    } else {
      row.controlling_norm = "bmo_rect";
      row.controlling_value = rect;
    }
    const GridFunction2D image = iterated_commutator_apply(
        [&](const GridFunction2D& g) { return nine_part_apply(tag, phi_amb, g); }, b_amb);
    row.commutator_norm = std::sqrt(bmo_d_norm_sq(haar_forward_2d(image)).norm_sq);
    const double denom = row.controlling_value * b_norm;
    row.ratio = denom > 0.0 ? row.commutator_norm / denom : 0.0;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace dyadic
