#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dyadic/haar.hpp"
#include "dyadic/io.hpp"
#include "dyadic/lattice.hpp"
#include "dyadic/random.hpp"

namespace dyadic::experiments {

/// hh-span symbol: with equal odds either i.i.d. normal coefficients or a
/// sparse set (density 0.3) with log-normal amplitudes.
HaarSpectrum2D random_symbol(Rng& rng, Depth depth);

/// Symbol number `index` of the stream identified by `seed`.
HaarSpectrum2D sample_symbol(std::uint64_t seed, std::uint64_t index, Depth depth);

/// lmo_char_norm / lmo_d_norm^2; zero for the zero symbol.
double lmo_equivalence_ratio(const HaarSpectrum2D& phi);

struct ExtremalRow {
  DyadicRect rect;
  double norm = 0.0;       ///< sqrt of the BMO norm squared of the hh part
  double mean = 0.0;       ///< m_R of the hh part
  double growth = 0.0;     ///< |mean| / ((k+1)(l+1) norm)
};

ExtremalRow extremal_row(const DyadicRect& r, Depth depth);

/// max over rectangles R of |m_R b| / ((k+1)(l+1) sqrt(bmo(b))), b in the hh span.
double max_growth_ratio(const HaarSpectrum2D& b);

/// lmo_char_norm(phi) / max_R bmo(Pi_phi b_R) with b_R the extremal function of R.
double necessity_ratio(const HaarSpectrum2D& phi);

/// sqrt(bmo(Pi_phi b)) / (lmo_d_norm(phi) sqrt(bmo(b))).
double sufficiency_ratio(const HaarSpectrum2D& phi, const HaarSpectrum2D& b);

/// Twenty fixed hh-span probe functions, independent of any run seed.
std::vector<HaarSpectrum2D> delta_probe_set(Depth depth);

/// max over probes of sqrt(bmo(Delta_phi b) / bmo(b)), divided by sqrt(bmo(phi)).
double delta_ratio(const HaarSpectrum2D& phi, const std::vector<HaarSpectrum2D>& probes);

/// sqrt(bmo([S1,[S2,M_phi]] b)) / (lmo_d_norm(phi) sqrt(bmo(b))).
double commutator_ratio(const HaarSpectrum2D& phi, const HaarSpectrum2D& b);

struct ContinuousCommutatorRow {
  double dyadic_ratio = 0.0;
  /// Largest per-block commutator norm over the sampled grids, over
  /// lmo_d_norm(phi) times the square root of sampled_continuous_bmo(b).
  double sampled_ratio = 0.0;
};

ContinuousCommutatorRow continuous_commutator(const HaarSpectrum2D& phi, const HaarSpectrum2D& b, int n_grids,
                                              std::uint64_t seed);

struct LemmaCoreRow {
  double lhs = 0.0;  ///< ||Pi_b E_k||
  double rhs = 0.0;  ///< ||Pi_{sigma_k b}||
};

LemmaCoreRow lemma_core(const HaarSpectrum2D& b, GenerationIndex k);

struct ExperimentConfig {
  std::uint64_t seed = 1;
  int depth = 3;
  int trials = 20;
  /// Asserted tolerance; each experiment has its own default.
  std::optional<double> tolerance;
  int samples = 4;
};

const std::vector<std::string>& experiment_names();

/// Throws ValidationError for an unknown name.
io::CsvTable run_experiment(const std::string& name, const ExperimentConfig& config);

}  // namespace dyadic::experiments
