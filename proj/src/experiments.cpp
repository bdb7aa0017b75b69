#include "dyadic/experiments.hpp"

#include <algorithm>
#include <cmath>

#include "dyadic/dense_operator.hpp"
#include "dyadic/error.hpp"
#include "dyadic/extremal.hpp"
#include "dyadic/nine_part.hpp"
#include "dyadic/norms.hpp"
#include "dyadic/paraproduct.hpp"
#include "dyadic/pinned_constants.hpp"
#include "dyadic/prefix_table.hpp"
#include "dyadic/projection.hpp"
#include "dyadic/sampled_bmo.hpp"
#include "dyadic/shifts.hpp"

namespace dyadic::experiments {

namespace {

constexpr std::uint64_t kProbeSeed = 0x9B0BE5;

template <class F>
void for_each_rect(Depth d, F&& f) {
  for (int k = 0; k < d.s; ++k) {
    for (int l = 0; l < d.t; ++l) {
      for (int i = 0; i < (1 << k); ++i) {
        for (int j = 0; j < (1 << l); ++j) f(DyadicRect{DyadicInterval(k, i), DyadicInterval(l, j)});
      }
    }
  }
}

double bmo_of(const GridFunction2D& f) { return bmo_d_norm_sq(haar_forward_2d(f)).norm_sq; }

HaarSpectrum2D dense_symbol(Rng& rng, Depth depth) {
  HaarSpectrum2D c(depth);
  for (int p = 1; p < c.rows(); ++p) {
    for (int q = 1; q < c.cols(); ++q) c(p, q) = rng.normal();
  }
  return c;
}

HaarSpectrum2D sparse_symbol(Rng& rng, Depth depth) {
  HaarSpectrum2D c(depth);
  for (int p = 1; p < c.rows(); ++p) {
    for (int q = 1; q < c.cols(); ++q) {
      if (rng.uniform() < 0.3) c(p, q) = rng.normal() * std::exp(rng.normal());
    }
  }
  return c;
}

Depth square(int j) { return {j, j}; }

}  // namespace

HaarSpectrum2D random_symbol(Rng& rng, Depth depth) {
  validate_depth(depth);
  for (;;) {
    HaarSpectrum2D c = rng.bit() ? dense_symbol(rng, depth) : sparse_symbol(rng, depth);
    if (c.hh_norm_sq() > 0.0) return c;
  }
}

HaarSpectrum2D sample_symbol(std::uint64_t seed, std::uint64_t index, Depth depth) {
  Rng rng(derive_seed(seed, index));
  return random_symbol(rng, depth);
}

double lmo_equivalence_ratio(const HaarSpectrum2D& phi) {
  const double d = lmo_d_norm(phi);
  return d > 0.0 ? lmo_char_norm(phi) / (d * d) : 0.0;
}

ExtremalRow extremal_row(const DyadicRect& r, Depth depth) {
  const HaarSpectrum2D hh = haar_forward_2d(extremal_bmo_function(r, depth)).hh_part();
  ExtremalRow row{r};
  row.norm = std::sqrt(bmo_d_norm_sq(hh).norm_sq);
  row.mean = rect_mean(PrefixTable(haar_inverse_2d(hh)), r, depth);
  const double gens = (r.s.level + 1.0) * (r.t.level + 1.0);
  row.growth = row.norm > 0.0 ? std::abs(row.mean) / (gens * row.norm) : 0.0;
  return row;
}

double max_growth_ratio(const HaarSpectrum2D& b) {
  const HaarSpectrum2D hh = b.hh_part();
  const double norm = std::sqrt(bmo_d_norm_sq(hh).norm_sq);
  if (norm == 0.0) return 0.0;
  const PrefixTable table(haar_inverse_2d(hh));
  double best = 0.0;
  for_each_rect(b.depth(), [&](const DyadicRect& r) {
    const double gens = (r.s.level + 1.0) * (r.t.level + 1.0);
    best = std::max(best, std::abs(rect_mean(table, r, b.depth())) / (gens * norm));
  });
  return best;
}

double necessity_ratio(const HaarSpectrum2D& phi) {
  const Depth d = phi.depth();
  double best = 0.0;
  for_each_rect(d, [&](const DyadicRect& r) {
    best = std::max(best, bmo_of(paraproduct(Signature::pi(), phi, extremal_bmo_function(r, d))));
  });
  return best > 0.0 ? lmo_char_norm(phi) / best : 0.0;
}

double sufficiency_ratio(const HaarSpectrum2D& phi, const HaarSpectrum2D& b) {
  const double denom = lmo_d_norm(phi) * std::sqrt(bmo_d_norm_sq(b).norm_sq);
  if (denom == 0.0) return 0.0;
  return std::sqrt(bmo_of(paraproduct(Signature::pi(), phi, haar_inverse_2d(b)))) / denom;
}

std::vector<HaarSpectrum2D> delta_probe_set(Depth depth) {
  std::vector<HaarSpectrum2D> probes;
  for (std::uint64_t i = 0; i < 20; ++i) {
    Rng rng(derive_seed(kProbeSeed, i));
    probes.push_back(i % 2 ? sparse_symbol(rng, depth) : dense_symbol(rng, depth));
    if (probes.back().hh_norm_sq() == 0.0) probes.back() = dense_symbol(rng, depth);
  }
  return probes;
}

double delta_ratio(const HaarSpectrum2D& phi, const std::vector<HaarSpectrum2D>& probes) {
  const double phi_norm = std::sqrt(bmo_d_norm_sq(phi).norm_sq);
  if (phi_norm == 0.0) return 0.0;
  double best = 0.0;
  for (const HaarSpectrum2D& b : probes) {
    require_same_depth(b.depth(), phi.depth());
    const double bn = bmo_d_norm_sq(b).norm_sq;
    if (bn == 0.0) continue;
    best = std::max(best, bmo_of(paraproduct(Signature::delta_type(), phi, haar_inverse_2d(b))) / bn);
  }
  return std::sqrt(best) / phi_norm;
}

double commutator_ratio(const HaarSpectrum2D& phi, const HaarSpectrum2D& b) {
  const double denom = lmo_d_norm(phi) * std::sqrt(bmo_d_norm_sq(b).norm_sq);
  if (denom == 0.0) return 0.0;
  return std::sqrt(bmo_of(iterated_commutator_apply(haar_inverse_2d(phi), haar_inverse_2d(b)))) / denom;
}

ContinuousCommutatorRow continuous_commutator(const HaarSpectrum2D& phi, const HaarSpectrum2D& b, int n_grids,
                                              std::uint64_t seed) {
  ContinuousCommutatorRow row;
  row.dyadic_ratio = commutator_ratio(phi, b);
  const GridFunction2D phi_g = haar_inverse_2d(phi);
  const GridFunction2D b_g = haar_inverse_2d(b);
  double best = 0.0;
  for (int k = 0; k < n_grids; ++k) {
    const ShiftedProductGrid grid = sampled_product_grid(seed, k);
    const std::vector<GridBlock> phi_blocks = project_onto_grid(phi_g, grid);
    const std::vector<GridBlock> b_blocks = project_onto_grid(b_g, grid);
    for (std::size_t i = 0; i < phi_blocks.size(); ++i) {
      best = std::max(best, bmo_of(iterated_commutator_apply(phi_blocks[i].values, b_blocks[i].values)));
    }
  }
  const double denom = lmo_d_norm(phi) * std::sqrt(sampled_continuous_bmo(b_g, n_grids, seed));
  row.sampled_ratio = denom > 0.0 ? std::sqrt(best) / denom : 0.0;
  return row;
}

LemmaCoreRow lemma_core(const HaarSpectrum2D& b, GenerationIndex k) {
  const Depth d = b.depth();
  const HaarSpectrum2D hb = b.hh_part();
  const DenseOperator lhs = assemble(
      [&](const HaarSpectrum2D& c) {
        return haar_forward_2d(paraproduct(Signature::pi(), hb, haar_inverse_2d(conditional_expectation(c, k))));
      },
      d);
  const HaarSpectrum2D s = sigma_k(hb, k);
  const DenseOperator rhs =
      assemble_grid_map([&](const GridFunction2D& f) { return paraproduct(Signature::pi(), s, f); }, d);
  return {operator_norm(lhs), operator_norm(rhs)};
}

namespace {

io::CsvTable growth_table(const ExperimentConfig& cfg) {
  io::CsvTable t({"kind", "trial", "k1", "k2", "norm", "norm_bound", "ratio", "ratio_upper", "ratio_lower"});
  const Depth d = square(cfg.depth);
  int n = 0;
  for_each_rect(d, [&](const DyadicRect& r) {
    const ExtremalRow row = extremal_row(r, d);
    const bool interior = r.s.level >= 1 && r.t.level >= 1;
    t.row() << "extremal" << n++ << r.s.level << r.t.level << row.norm << pinned::kExtremalBound << row.growth
            << pinned::kGrowthUpper << (interior ? pinned::kGrowthSharpness : 0.0);
  });
  for (int i = 0; i < cfg.trials; ++i) {
    const HaarSpectrum2D b = sample_symbol(cfg.seed, static_cast<std::uint64_t>(i), d);
    t.row() << "random" << i << "" << "" << std::sqrt(bmo_d_norm_sq(b).norm_sq) << "" << max_growth_ratio(b)
            << pinned::kGrowthUpper << 0.0;
  }
  return t;
}

io::CsvTable paraproduct_bound_table(const ExperimentConfig& cfg) {
  io::CsvTable t({"kind", "depth", "trial", "ratio", "lower", "upper"});
  for (int j = 2; j <= std::max(2, cfg.depth); ++j) {
    for (int i = 0; i < cfg.trials; ++i) {
      const auto idx = static_cast<std::uint64_t>(2 * i);
      const HaarSpectrum2D phi = sample_symbol(cfg.seed + static_cast<std::uint64_t>(j), idx, square(j));
      const HaarSpectrum2D b = sample_symbol(cfg.seed + static_cast<std::uint64_t>(j), idx + 1, square(j));
      t.row() << "sufficiency" << j << i << sufficiency_ratio(phi, b) << 0.0 << pinned::kSufficiencyBound;
    }
  }
  const Depth d = square(cfg.depth);
  const std::vector<HaarSpectrum2D> probes = delta_probe_set(d);
  for (int i = 0; i < cfg.trials; ++i) {
    const HaarSpectrum2D phi = sample_symbol(cfg.seed, static_cast<std::uint64_t>(i), d);
    t.row() << "necessity" << cfg.depth << i << necessity_ratio(phi) << 0.0 << pinned::kNecessityBound;
    t.row() << "delta" << cfg.depth << i << delta_ratio(phi, probes) << pinned::kDeltaLower << pinned::kDeltaUpper;
  }
  return t;
}

io::CsvTable lemma_core_table(const ExperimentConfig& cfg) {
  io::CsvTable t({"trial", "k1", "k2", "lhs_norm", "rhs_norm", "abs_diff", "tolerance"});
  const Depth d = square(cfg.depth);
  for (int i = 0; i < cfg.trials; ++i) {
    const HaarSpectrum2D b = sample_symbol(cfg.seed, static_cast<std::uint64_t>(i), d);
    for (int k1 = 0; k1 <= d.s; ++k1) {
      for (int k2 = 0; k2 <= d.t; ++k2) {
        const LemmaCoreRow r = lemma_core(b, {k1, k2});
        t.row() << i << k1 << k2 << r.lhs << r.rhs << std::abs(r.lhs - r.rhs) << cfg.tolerance.value_or(1e-8);
      }
    }
  }
  return t;
}

io::CsvTable nine_part_table(const ExperimentConfig& cfg) {
  io::CsvTable t({"trial", "sum_error", "rr_formula_error", "rr_max_inner_product", "alternative_mismatch",
                  "tolerance"});
  const Depth d = square(cfg.depth);
  const AmbientEmbedding amb(d);
  const NinePartTag rr{Relation::equal, Relation::equal};
  const NinePartTag delta_r{Relation::coarser, Relation::equal};
  for (int i = 0; i < cfg.trials; ++i) {
    const HaarSpectrum2D phi = sample_symbol(cfg.seed, static_cast<std::uint64_t>(2 * i), d);
    const GridFunction2D f = haar_inverse_2d(sample_symbol(cfg.seed, static_cast<std::uint64_t>(2 * i + 1), d));
    GridFunction2D sum = GridFunction2D::zeros(d);
    for (const NinePartTag& tag : all_nine_part_tags()) sum = sum + nine_part_apply(tag, phi, f);
    const double sum_err = max_abs_difference(sum, pointwise_product(haar_inverse_2d(phi), f));

    const GridFunction2D phi_g = haar_inverse_2d(phi);
    const HaarSpectrum2D phi_amb = haar_forward_2d(amb.embed(phi_g));
    const GridMap part = [&](const GridFunction2D& g) { return nine_part_apply(rr, phi_amb, g); };
    double formula_err = 0.0;
    double max_inner = 0.0;
    std::vector<HaarSpectrum2D> images;
    for_each_rect(d, [&](const DyadicRect& r) {
      const RrCommutatorTerms terms = rr_commutator_on_basis(phi_g, r);
      const GridFunction2D h_r = amb.embed(haar_inverse_2d(haar_basis(r, d)));
      const HaarSpectrum2D direct = haar_forward_2d(iterated_commutator_apply(part, h_r));
      formula_err = std::max(formula_err, max_abs_difference(direct, terms.image));
      for (const HaarSpectrum2D& other : images) max_inner = std::max(max_inner, std::abs(inner_product(other, terms.image)));
      images.push_back(terms.image);
    });
    const double mismatch =
        max_abs_difference(delta_r_alternative_apply(phi, f), nine_part_apply(delta_r, phi, f));
    t.row() << i << sum_err << formula_err << max_inner << mismatch << cfg.tolerance.value_or(1e-10);
  }
  return t;
}

io::CsvTable commutator_bound_table(const ExperimentConfig& cfg) {
  io::CsvTable t({"kind", "depth", "trial", "ratio", "bound"});
  for (int j = 2; j <= std::clamp(cfg.depth, 2, 3); ++j) {
    for (int i = 0; i < cfg.trials; ++i) {
      const auto idx = static_cast<std::uint64_t>(2 * i);
      const HaarSpectrum2D phi = sample_symbol(cfg.seed + static_cast<std::uint64_t>(j), idx, square(j));
      const HaarSpectrum2D b = sample_symbol(cfg.seed + static_cast<std::uint64_t>(j), idx + 1, square(j));
      t.row() << "dyadic" << j << i << commutator_ratio(phi, b) << pinned::kCommutatorBound;
    }
  }
  for (int i = 0; i < cfg.trials; ++i) {
    const auto idx = static_cast<std::uint64_t>(2 * i);
    const HaarSpectrum2D phi = sample_symbol(cfg.seed + 100, idx, square(2));
    const HaarSpectrum2D b = sample_symbol(cfg.seed + 100, idx + 1, square(2));
    const ContinuousCommutatorRow row = continuous_commutator(phi, b, cfg.samples, cfg.seed);
    t.row() << "sampled_grids" << 2 << i << row.sampled_ratio << "";
  }
  return t;
}

io::CsvTable lmo_equivalence_table(const ExperimentConfig& cfg) {
  io::CsvTable t({"trial", "lmo_char", "lmo_d", "ratio", "lower", "upper", "inside"});
  const Depth d = square(cfg.depth);
  for (int i = 0; i < cfg.trials; ++i) {
    const HaarSpectrum2D phi = sample_symbol(cfg.seed, static_cast<std::uint64_t>(i), d);
    const double ratio = lmo_equivalence_ratio(phi);
    const bool inside = ratio >= pinned::kLmoRatioLower && ratio <= pinned::kLmoRatioUpper;
    t.row() << i << lmo_char_norm(phi) << lmo_d_norm(phi) << ratio << pinned::kLmoRatioLower
            << pinned::kLmoRatioUpper << (inside ? 1 : 0);
  }
  return t;
}

}  // namespace

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names{"growth",       "paraproduct-bound", "lemma-core",
                                              "nine-part",    "commutator-bound",  "lmo-equivalence"};
  return names;
}

io::CsvTable run_experiment(const std::string& name, const ExperimentConfig& config) {
  if (config.depth < 1 || config.depth > 4) throw ValidationError("experiment depth must be in 1..4");
  if (config.trials < 1) throw ValidationError("trials must be positive");
  if (config.samples < 1) throw ValidationError("samples must be positive");
  if (name == "growth") return growth_table(config);
  if (name == "paraproduct-bound") return paraproduct_bound_table(config);
  if (name == "lemma-core") return lemma_core_table(config);
  if (name == "nine-part") return nine_part_table(config);
  if (name == "commutator-bound") return commutator_bound_table(config);
  if (name == "lmo-equivalence") return lmo_equivalence_table(config);
  throw ValidationError("unknown experiment: " + name);
}

}  // namespace dyadic::experiments
