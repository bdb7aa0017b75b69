// Regenerates include/dyadic/pinned_constants.hpp from sweeps on seeds
// disjoint from the acceptance run.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dyadic/experiments.hpp"
#include "dyadic/io.hpp"

using namespace dyadic;
using namespace dyadic::experiments;

namespace {

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  int count = 0;
  void add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    ++count;
  }
};

double round_up(double v) {
  const double scale = std::pow(10.0, 2 - std::floor(std::log10(v)));
  return std::ceil(v * scale) / scale;
}

double round_down(double v) {
  const double scale = std::pow(10.0, 2 - std::floor(std::log10(v)));
  return std::floor(v * scale) / scale;
}

void log_range(const char* what, const Range& r) {
  std::fprintf(stderr, "%-22s n=%4d  min=%.6g  max=%.6g\n", what, r.count, r.lo, r.hi);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sweep the empirical constants"};
  std::uint64_t seed = 1000;
  std::string output;
  double upper_margin = 1.1;
  double lower_margin = 0.9;
  app.add_option("--seed", seed);
  app.add_option("--output", output, "header path; stdout if omitted");
  app.add_option("--upper-margin", upper_margin);
  app.add_option("--lower-margin", lower_margin);
  CLI11_PARSE(app, argc, argv);

  const double ln2_4 = std::pow(std::numbers::ln2, 4);
  const double ln4_4 = std::pow(2.0 * std::numbers::ln2, 4);

  Range lmo;
  for (int i = 0; i < 200; ++i) lmo.add(lmo_equivalence_ratio(sample_symbol(seed, i, {3, 3})));
  log_range("lmo ratio", lmo);

  Range extremal;
  Range sharp;
  Range growth;
  for (int j1 = 1; j1 <= 4; ++j1) {
    for (int j2 = 1; j2 <= 4; ++j2) {
      const Depth d{j1, j2};
      for (int k = 0; k < j1; ++k) {
        for (int l = 0; l < j2; ++l) {
          for (int i = 0; i < (1 << k); ++i) {
            for (int j = 0; j < (1 << l); ++j) {
              const ExtremalRow row = extremal_row({DyadicInterval(k, i), DyadicInterval(l, j)}, d);
              extremal.add(row.norm);
              growth.add(row.growth);
              if (k >= 1 && l >= 1) sharp.add(row.growth);
            }
          }
        }
      }
    }
  }
  for (int j = 2; j <= 4; ++j) {
    for (int i = 0; i < 200; ++i) growth.add(max_growth_ratio(sample_symbol(seed + 10, i, {j, j})));
  }
  log_range("extremal norm", extremal);
  log_range("growth ratio", growth);
  log_range("extremal sharpness", sharp);

  Range necessity;
  Range delta;
  const std::vector<HaarSpectrum2D> probes = delta_probe_set({3, 3});
  for (int i = 0; i < 50; ++i) {
    const HaarSpectrum2D phi = sample_symbol(seed, i, {3, 3});
    necessity.add(necessity_ratio(phi));
    delta.add(delta_ratio(phi, probes));
  }
  log_range("necessity", necessity);
  log_range("delta", delta);

  Range sufficiency;
  for (int j = 2; j <= 4; ++j) {
    for (int i = 0; i < 100; ++i) {
      sufficiency.add(sufficiency_ratio(sample_symbol(seed + j, 2 * i, {j, j}), sample_symbol(seed + j, 2 * i + 1, {j, j})));
    }
  }
  log_range("sufficiency", sufficiency);

  Range commutator;
  for (int j = 2; j <= 3; ++j) {
    for (int i = 0; i < 100; ++i) {
      commutator.add(commutator_ratio(sample_symbol(seed + j, 2 * i, {j, j}), sample_symbol(seed + j, 2 * i + 1, {j, j})));
    }
  }
  log_range("commutator", commutator);

  std::ostringstream out;
  const auto constant = [&](const char* name, double v, const char* note) {
    out << "// " << note << "\n";
    out << "inline constexpr double " << name << " = " << io::format_double(v) << ";\n";
  };
  const auto observed = [](const Range& r) {
    std::ostringstream s;
    s << "observed [" << io::format_double(r.lo) << ", " << io::format_double(r.hi) << "] over " << r.count;
    return s.str();
  };
  out << "#pragma once\n\n// Generated by pin_constants --seed " << seed << ".\nnamespace dyadic::pinned {\n\n";
  constant("kLmoRatioLower", std::max(ln2_4, round_down(lower_margin * lmo.lo)), observed(lmo).c_str());
  constant("kLmoRatioUpper", std::min(ln4_4, round_up(upper_margin * lmo.hi)), observed(lmo).c_str());
  constant("kExtremalBound", round_up(upper_margin * extremal.hi), observed(extremal).c_str());
  constant("kGrowthUpper", round_up(upper_margin * growth.hi), observed(growth).c_str());
  constant("kGrowthSharpness", round_down(lower_margin * sharp.lo), observed(sharp).c_str());
  constant("kNecessityBound", std::min(ln4_4, round_up(upper_margin * necessity.hi)), observed(necessity).c_str());
  constant("kSufficiencyBound", round_up(upper_margin * sufficiency.hi), observed(sufficiency).c_str());
  constant("kDeltaLower", round_down(lower_margin * delta.lo), observed(delta).c_str());
  constant("kDeltaUpper", round_up(upper_margin * delta.hi), observed(delta).c_str());
  constant("kCommutatorBound", round_up(upper_margin * commutator.hi), observed(commutator).c_str());
  out << "\n}  // namespace dyadic::pinned\n";

  if (output.empty()) {
    std::cout << out.str();
  } else {
    io::write_atomic(output, out.str());
  }
  return 0;
}
