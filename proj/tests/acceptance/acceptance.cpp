#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/SVD>

#include "dyadic/dense_operator.hpp"
#include "dyadic/experiments.hpp"
#include "dyadic/extremal.hpp"
#include "dyadic/hilbert.hpp"
#include "dyadic/nine_part.hpp"
#include "dyadic/norms.hpp"
#include "dyadic/paraproduct.hpp"
#include "dyadic/pinned_constants.hpp"
#include "dyadic/projection.hpp"
#include "dyadic/shifts.hpp"
#include "dyadic/square_function.hpp"
#include "oracles.hpp"

using namespace dyadic;
namespace ex = dyadic::experiments;

namespace {

constexpr std::uint64_t kSeed = 2000;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

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

double svd_norm(const Eigen::MatrixXd& a) {
  return Eigen::JacobiSVD<Eigen::MatrixXd>(a).singularValues()(0);
}

// Sum over rectangles of c_R^2 chi_R / |R|, cell by cell.
GridFunction2D direct_square_function_sq(const HaarSpectrum2D& c) {
  const Depth d = c.depth();
  GridFunction2D out = GridFunction2D::zeros(d);
  std::vector<double> values(static_cast<std::size_t>(d.cell_count()), 0.0);
  for_each_rect(d, [&](const DyadicRect& r) {
    const double w = c.hh(r) * c.hh(r) / r.area();
    for (int i = r.s.first_cell(d.s); i < r.s.end_cell(d.s); ++i) {
      for (int j = r.t.first_cell(d.t); j < r.t.end_cell(d.t); ++j) values[static_cast<std::size_t>(i) * d.cells_t() + j] += w;
    }
  });
  return {d, std::move(values)};
}

Outcome parseval() {
  Rng rng(derive_seed(kSeed, 1));
  double parseval_err = 0.0;
  double trip_err = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const Depth d{1 + static_cast<int>(rng.below(4)), 1 + static_cast<int>(rng.below(4))};
    const GridFunction2D f = oracle::random_grid(rng, d);
    const HaarSpectrum2D c = haar_forward_2d(f);
    double energy = 0.0;
    for (double v : f.values()) energy += v * v;
    energy *= d.cell_area();
    parseval_err = std::max(parseval_err, std::abs(c.norm_sq() - energy) / energy);
    trip_err = std::max(trip_err, max_abs_difference(haar_inverse_2d(c), f));
  }
  return {parseval_err <= 1e-12 && trip_err <= 1e-12,
          "parseval rel " + fmt("%.2e", parseval_err) + ", round trip " + fmt("%.2e", trip_err)};
}

Outcome eq_decomposition() {
  Rng rng(derive_seed(kSeed, 2));
  const Depth d{3, 3};
  double err = 0.0;
  for (int n = 0; n < 100; ++n) {
    const HaarSpectrum2D c = oracle::random_spectrum(rng, d);
    for (int k1 = 0; k1 <= 3; ++k1) {
      for (int k2 = 0; k2 <= 3; ++k2) {
        const HaarSpectrum2D sum = apply_projection(c, projection::E{{k1, k2}}) +
                                   apply_projection(apply_projection(c, projection::E1{k1}), projection::Q2{k2}) +
                                   apply_projection(apply_projection(c, projection::Q1{k1}), projection::E2{k2}) +
                                   apply_projection(c, projection::Q{{k1, k2}});
        err = std::max(err, max_abs_difference(sum, c.hh_part()));
      }
    }
  }
  return {err <= 1e-14, "max abs " + fmt("%.2e", err)};
}

Outcome sigma_identity() {
  const Depth d{3, 3};
  double norm_gap = 0.0;
  double oracle_gap = 0.0;
  double iso = 0.0;
  double sq = 0.0;
  for (int n = 0; n < 20; ++n) {
    const HaarSpectrum2D b = ex::sample_symbol(derive_seed(kSeed, 3), n, d);
    const GridFunction2D s2 = direct_square_function_sq(b);
    for (int k1 = 0; k1 <= 3; ++k1) {
      for (int k2 = 0; k2 <= 3; ++k2) {
        const GenerationIndex k{k1, k2};
        const ex::LemmaCoreRow row = ex::lemma_core(b, k);
        norm_gap = std::max(norm_gap, std::abs(row.lhs - row.rhs));
        const DenseOperator lhs = assemble(
            [&](const HaarSpectrum2D& c) {
              return haar_forward_2d(paraproduct(Signature::pi(), b, haar_inverse_2d(conditional_expectation(c, k))));
            },
            d);
        const HaarSpectrum2D s = sigma_k(b, k);
        const DenseOperator rhs =
            assemble_grid_map([&](const GridFunction2D& f) { return paraproduct(Signature::pi(), s, f); }, d);
        oracle_gap = std::max({oracle_gap, std::abs(svd_norm(lhs.matrix()) - row.lhs),
                               std::abs(svd_norm(rhs.matrix()) - row.rhs)});
        iso = std::max(iso, std::abs(std::sqrt(s.norm_sq()) - std::sqrt(b.hh_norm_sq())) / std::sqrt(b.hh_norm_sq()));
        const GridFunction2D lhs_sq = direct_square_function_sq(s);
        const GridFunction2D rhs_sq = block_average(s2, k);
        double scale = 0.0;
        for (double v : s2.values()) scale = std::max(scale, v);
        sq = std::max(sq, max_abs_difference(lhs_sq, rhs_sq) / scale);
        sq = std::max(sq, max_abs_difference(square_function_sq(s), lhs_sq) / scale);
      }
    }
  }
  const bool pass = norm_gap <= 1e-8 && oracle_gap <= 1e-8 && iso <= 1e-12 && sq <= 1e-12;
  return {pass, "opnorm gap " + fmt("%.2e", norm_gap) + " (svd check " + fmt("%.2e", oracle_gap) + "), isometry " +
                    fmt("%.2e", iso) + ", square function " + fmt("%.2e", sq)};
}

Outcome bmo_solver() {
  double err = 0.0;
  for (int n = 0; n < 100; ++n) {
    const HaarSpectrum2D c = ex::sample_symbol(derive_seed(kSeed, 4), n, {2, 2});
    const double brute = oracle::brute_force_bmo(c);
    err = std::max(err, std::abs(bmo_d_norm_sq(c).norm_sq - brute) / std::max(1.0, brute));
  }
  return {err <= 1e-12, "max rel " + fmt("%.2e", err)};
}

Outcome nine_parts() {
  double err = 0.0;
  double classify = 0.0;
  int n = 0;
  for (const auto& [d, count] : {std::pair{Depth{2, 2}, 50}, std::pair{Depth{3, 3}, 20}}) {
    for (int i = 0; i < count; ++i, ++n) {
      const HaarSpectrum2D phi = ex::sample_symbol(derive_seed(kSeed, 5), 2 * n, d);
      const GridFunction2D f = haar_inverse_2d(ex::sample_symbol(derive_seed(kSeed, 5), 2 * n + 1, d));
      GridFunction2D sum = GridFunction2D::zeros(d);
      for (const NinePartTag& tag : all_nine_part_tags()) {
        const GridFunction2D part = nine_part_apply(tag, phi, f);
        if (i < 5) classify = std::max(classify, max_abs_difference(part, oracle::classified_product_part(tag, phi, f)));
        sum = sum + part;
      }
      double scale = 1.0;
      for (double v : f.values()) scale = std::max(scale, std::abs(v));
      err = std::max(err, max_abs_difference(sum, pointwise_product(haar_inverse_2d(phi), f)) / scale);
    }
  }
  return {err <= 1e-10 && classify <= 1e-10,
          "sum vs product " + fmt("%.2e", err) + ", classification " + fmt("%.2e", classify)};
}

struct RrOutcome {
  Outcome formula;
  Outcome orthogonality;
};

RrOutcome rr_checks() {
  const Depth src{2, 2};
  const AmbientEmbedding amb(src);
  const BasisOrder order(amb.ambient);
  const Eigen::MatrixXd s1 = shift_operator(amb.ambient, 1).matrix();
  const Eigen::MatrixXd s2 = shift_operator(amb.ambient, 2).matrix();
  double err = 0.0;
  double inner = 0.0;
  for (int n = 0; n < 20; ++n) {
    const GridFunction2D phi = haar_inverse_2d(ex::sample_symbol(derive_seed(kSeed, 6), n, src));
    // Haar-diagonal part: the diagonal of the multiplication matrix on hh inputs.
    const Eigen::MatrixXd m = oracle::multiplication_matrix(amb.embed(phi));
    Eigen::MatrixXd diag = Eigen::MatrixXd::Zero(m.rows(), m.cols());
    for (int k = 0; k < order.size(); ++k) {
      const auto [p, q] = order.heap_pair(k);
      if (p > 0 && q > 0) diag(k, k) = m(k, k);
    }
    const Eigen::MatrixXd comm = commutator(s1, commutator(s2, diag));
    std::vector<HaarSpectrum2D> images;
    for_each_rect(src, [&](const DyadicRect& r) {
      const RrCommutatorTerms terms = rr_commutator_on_basis(phi, r);
      const Eigen::VectorXd expected = comm * order.to_vector(haar_basis(r, amb.ambient));
      err = std::max(err, (expected - order.to_vector(terms.image)).cwiseAbs().maxCoeff());
      for (const HaarSpectrum2D& other : images) inner = std::max(inner, std::abs(inner_product(other, terms.image)));
      images.push_back(terms.image);
    });
  }
  const GridFunction2D chi = indicator({DyadicInterval(1, 0), DyadicInterval(1, 0)}, src);
  const DyadicRect unit{DyadicInterval(0, 0), DyadicInterval(0, 0)};
  const RrCommutatorTerms worked = rr_commutator_on_basis(chi, unit);
  const bool brackets = worked.brackets == std::array{0.25, -0.25, -0.25, 0.25};
  bool image = true;
  for (const DyadicInterval& i : {unit.s.right(), unit.s.left()}) {
    for (const DyadicInterval& j : {unit.t.right(), unit.t.left()}) image = image && worked.image.hh({i, j}) == 0.25;
  }
  return {{err <= 1e-11 && brackets && image,
           "max abs " + fmt("%.2e", err) + ", worked brackets " + (brackets ? "exact" : "wrong") + ", signed image " +
               (image ? "exact" : "wrong")},
          {inner <= 1e-12, "max |<image_R, image_R'>| " + fmt("%.2e", inner)}};
}

Outcome theorem_directions() {
  const Depth d{3, 3};
  double necessity = 0.0;
  for (int n = 0; n < 50; ++n) necessity = std::max(necessity, ex::necessity_ratio(ex::sample_symbol(kSeed + 8, n, d)));
  double extremal = 0.0;
  for_each_rect(d, [&](const DyadicRect& r) { extremal = std::max(extremal, ex::extremal_row(r, d).norm); });
  std::string detail = "necessity max " + fmt("%.4f", necessity) + " <= " + fmt("%.4f", pinned::kNecessityBound) +
                       ", extremal norm " + fmt("%.4f", extremal) + " <= " + fmt("%.4f", pinned::kExtremalBound) +
                       ", sufficiency max by depth";
  bool pass = necessity <= pinned::kNecessityBound && extremal <= pinned::kExtremalBound;
  for (int j = 2; j <= 4; ++j) {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      worst = std::max(worst, ex::sufficiency_ratio(ex::sample_symbol(kSeed + j, 2 * i, {j, j}),
                                                    ex::sample_symbol(kSeed + j, 2 * i + 1, {j, j})));
    }
    detail += " " + fmt("%.4f", worst);
    pass = pass && worst <= pinned::kSufficiencyBound;
  }
  detail += " <= " + fmt("%.4f", pinned::kSufficiencyBound);
  return {pass, detail};
}

Outcome delta_two_sided() {
  const Depth d{3, 3};
  const std::vector<HaarSpectrum2D> probes = ex::delta_probe_set(d);
  double lo = INFINITY;
  double hi = 0.0;
  int below = 0;
  for (int n = 0; n < 50; ++n) {
    const double r = ex::delta_ratio(ex::sample_symbol(kSeed + 9, n, d), probes);
    lo = std::min(lo, r);
    hi = std::max(hi, r);
    if (r < pinned::kDeltaLower) ++below;
  }
  // A symbol carried by rectangles with a full side is annihilated modulo
  // functions constant in one variable.
  const double top = ex::delta_ratio(haar_basis({DyadicInterval(0, 0), DyadicInterval(0, 0)}, d), probes);
  return {lo >= pinned::kDeltaLower && hi <= pinned::kDeltaUpper,
          "ratio range [" + fmt("%.4f", lo) + ", " + fmt("%.4f", hi) + "] vs pinned [" +
              fmt("%.4f", pinned::kDeltaLower) + ", " + fmt("%.4f", pinned::kDeltaUpper) + "], below lower " +
              std::to_string(below) + "/50, ratio for the top Haar symbol " + fmt("%.1e", top)};
}

Outcome monte_carlo_hilbert() {
  const StepFunction1D chi = StepFunction1D::indicator(0.0, 1.0);
  const std::vector<double> xs{-0.5, 0.25, 1.5, 2.0};
  bool pass = true;
  double worst = 0.0;
  double max_stderr = 0.0;
  for (std::uint64_t seed : {1, 2, 3}) {
    for (const McEstimate& e : mc_hilbert(chi, xs, 2000, seed)) {
      const double exact = std::log(std::abs(e.x / (e.x - 1.0))) / std::numbers::pi;
      const double excess = std::abs(e.estimate - exact) - (3.0 * e.stderr_ + 0.01);
      worst = std::max(worst, std::abs(e.estimate - exact));
      max_stderr = std::max(max_stderr, e.stderr_);
      pass = pass && excess <= 0.0 && e.stderr_ <= 0.05;
    }
  }
  return {pass, "max |error| " + fmt("%.4f", worst) + ", max stderr " + fmt("%.4f", max_stderr)};
}

Outcome lmo_equivalence() {
  int violations = 0;
  int analytic_violations = 0;
  const double analytic_lo = std::pow(std::numbers::ln2, 4);
  const double analytic_hi = std::pow(2.0 * std::numbers::ln2, 4);
  double lo = INFINITY;
  double hi = 0.0;
  for (int n = 0; n < 200; ++n) {
    const double r = ex::lmo_equivalence_ratio(ex::sample_symbol(kSeed + 11, n, {3, 3}));
    lo = std::min(lo, r);
    hi = std::max(hi, r);
    if (r < pinned::kLmoRatioLower || r > pinned::kLmoRatioUpper) ++violations;
    if (r < analytic_lo || r > analytic_hi) ++analytic_violations;
  }
  return {violations == 0, "observed [" + fmt("%.4f", lo) + ", " + fmt("%.4f", hi) + "], pinned [" +
                               fmt("%.4f", pinned::kLmoRatioLower) + ", " + fmt("%.4f", pinned::kLmoRatioUpper) +
                               "] width " + fmt("%.4f", pinned::kLmoRatioUpper - pinned::kLmoRatioLower) +
                               ", violations " + std::to_string(violations) + "/200 (outside [" +
                               fmt("%.4f", analytic_lo) + ", " + fmt("%.4f", analytic_hi) + "]: " +
                               std::to_string(analytic_violations) + ")"};
}

}  // namespace

int main() {
  int failures = 0;
  const auto run = [&](int id, const char* name, double budget_s, const std::function<Outcome()>& check) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_s > 0 && secs > budget_s) {
      o.pass = false;
      o.detail += ", over time budget";
    }
    if (!o.pass) ++failures;
    std::printf("criterion %2d %s  %s: %s [%.2fs]\n", id, o.pass ? "PASS" : "FAIL", name, o.detail.c_str(), secs);
    std::fflush(stdout);
  };
  run(1, "Parseval and round trip", 5, parseval);
  run(2, "E/Q decomposition", 0, eq_decomposition);
  run(3, "truncated paraproduct identity", 60, sigma_identity);
  run(4, "BMO solver vs exhaustive search", 30, bmo_solver);
  run(5, "nine-part sum", 0, nine_parts);
  RrOutcome rr;
  run(6, "diagonal-part commutator formula", 0, [&] {
    rr = rr_checks();
    return rr.formula;
  });
  run(7, "diagonal-part image orthogonality", 0, [&] { return rr.orthogonality; });
  run(8, "paraproduct necessity and sufficiency", 0, theorem_directions);
  run(9, "Delta paraproduct two-sided bound", 0, delta_two_sided);
  run(10, "Monte-Carlo Hilbert transform", 120, monte_carlo_hilbert);
  run(11, "lmo equivalence interval", 0, lmo_equivalence);
  return failures == 0 ? 0 : 1;
}
