#include <cmath>

#include "doctest.h"
#include "dyadic/dense_operator.hpp"
#include "dyadic/error.hpp"
#include "dyadic/experiments.hpp"
#include "dyadic/nine_part.hpp"
#include "dyadic/paraproduct.hpp"
#include "dyadic/projection.hpp"
#include "dyadic/square_function.hpp"
#include "oracles.hpp"

using namespace dyadic;

namespace {
const DyadicInterval kUnit(0, 0);
const DyadicRect kSquare{kUnit, kUnit};
const DyadicRect kR0{DyadicInterval(1, 0), DyadicInterval(1, 0)};

GridFunction2D hh_grid(Rng& rng, Depth d) { return haar_inverse_2d(oracle::random_hh_spectrum(rng, d)); }

// Pi_b composed with the full conditional expectation at generation k.
DenseOperator pi_after_expectation(const HaarSpectrum2D& b, GenerationIndex k) {
  return assemble(
      [&](const HaarSpectrum2D& c) {
        return haar_forward_2d(paraproduct(Signature::pi(), b, haar_inverse_2d(conditional_expectation(c, k))));
      },
      b.depth());
}

DenseOperator pi_operator(const HaarSpectrum2D& b) {
  return assemble_grid_map([&](const GridFunction2D& f) { return paraproduct(Signature::pi(), b, f); }, b.depth());
}
}  // namespace

TEST_CASE("signature support") {
  CHECK(Signature::pi().supported());
  CHECK(Signature::mixed01().delta == std::array{1, 0});
  Signature bad = Signature::pi();
  bad.eps = {1, 0};
  CHECK_FALSE(bad.supported());
  const Depth d{1, 1};
  CHECK_THROWS_AS(paraproduct(bad, HaarSpectrum2D(d), GridFunction2D::zeros(d)), UnsupportedSignature);
  Signature mismatched = Signature::pi();
  mismatched.delta = {0, 0};
  CHECK_THROWS_WITH_AS(paraproduct(mismatched, HaarSpectrum2D(d), GridFunction2D::zeros(d)),
                       doctest::Contains("unsupported signature"), ValidationError);
  CHECK_THROWS_WITH_AS(paraproduct(Signature::pi(), HaarSpectrum2D(d), GridFunction2D::zeros({2, 1})),
                       doctest::Contains("depth mismatch"), ValidationError);
  CHECK(parse_signature("01") == Signature::mixed01());
  CHECK_THROWS_AS(parse_signature("22"), ValidationError);
}

TEST_CASE("paraproduct examples") {
  const Depth d{1, 1};
  const HaarSpectrum2D h = haar_basis(kSquare, d);
  CHECK(paraproduct(Signature::pi(), h, GridFunction2D::constant(d, 1.0)) == GridFunction2D(d, {1, -1, -1, 1}));
  CHECK(paraproduct(Signature::delta_type(), h, haar_inverse_2d(h)) == GridFunction2D::constant(d, 1.0));
  // f = 1 (x) h: f_J = 1 for J = [0,1), m_I f_J = 1, output h (x) chi_J/|J| = h (x) 1.
  HaarSpectrum2D one_h(d);
  one_h(0, 1) = 1.0;
  const GridFunction2D out = paraproduct(Signature::mixed01(), h, haar_inverse_2d(one_h));
  HaarSpectrum2D h_one(d);
  h_one(1, 0) = 1.0;
  CHECK(max_abs_difference(out, haar_inverse_2d(h_one)) <= 1e-15);
}

TEST_CASE("paraproduct matches its defining sum") {
  Rng rng(21);
  const Depth d{2, 3};
  const HaarSpectrum2D phi = oracle::random_hh_spectrum(rng, d);
  const GridFunction2D f = oracle::random_grid(rng, d);
  const HaarSpectrum2D fc = haar_forward_2d(f);
  std::vector<double> pi(static_cast<std::size_t>(d.cell_count()), 0.0), delta = pi;
  for (int p = 1; p < fc.rows(); ++p) {
    for (int q = 1; q < fc.cols(); ++q) {
      const DyadicRect r{DyadicInterval::from_heap(p), DyadicInterval::from_heap(q)};
      const double mean = oracle::naive_mean(f, r.s.first_cell(d.s), r.s.end_cell(d.s), r.t.first_cell(d.t),
                                             r.t.end_cell(d.t));
      for (int i = 0; i < f.rows(); ++i) {
        for (int j = 0; j < f.cols(); ++j) {
          const double hr = oracle::haar_value(r.s, d.s, i) * oracle::haar_value(r.t, d.t, j);
          pi[static_cast<std::size_t>(i * f.cols() + j)] += phi(p, q) * mean * hr;
          delta[static_cast<std::size_t>(i * f.cols() + j)] += phi(p, q) * fc(p, q) * hr * hr;
        }
      }
    }
  }
  CHECK(max_abs_difference(paraproduct(Signature::pi(), phi, f), GridFunction2D(d, pi)) <= 1e-12);
  CHECK(max_abs_difference(paraproduct(Signature::delta_type(), phi, f), GridFunction2D(d, delta)) <= 1e-12);
}

TEST_CASE("bilinearity and adjointness") {
  Rng rng(22);
  const Depth d{3, 2};
  for (const Signature sig : {Signature::pi(), Signature::delta_type(), Signature::mixed01(), Signature::mixed10()}) {
    const HaarSpectrum2D p1 = oracle::random_hh_spectrum(rng, d), p2 = oracle::random_hh_spectrum(rng, d);
    const GridFunction2D f1 = oracle::random_grid(rng, d), f2 = oracle::random_grid(rng, d);
    const double a = rng.normal(), b = rng.normal();
    const GridFunction2D lhs = paraproduct(sig, a * p1 + b * p2, f1);
    const GridFunction2D rhs = a * paraproduct(sig, p1, f1) + b * paraproduct(sig, p2, f1);
    CHECK(max_abs_difference(lhs, rhs) <= 1e-12);
    const GridFunction2D lhs2 = paraproduct(sig, p1, a * f1 + b * f2);
    const GridFunction2D rhs2 = a * paraproduct(sig, p1, f1) + b * paraproduct(sig, p1, f2);
    CHECK(max_abs_difference(lhs2, rhs2) <= 1e-12);
  }
  for (int trial = 0; trial < 10; ++trial) {
    const HaarSpectrum2D phi = oracle::random_hh_spectrum(rng, d);
    const GridFunction2D f = hh_grid(rng, d), g = hh_grid(rng, d);
    const double lhs = inner_product(paraproduct(Signature::pi(), phi, f), g);
    const double rhs = inner_product(f, paraproduct(Signature::delta_type(), phi, g));
    CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(lhs)));
  }
}

TEST_CASE("sigma_k examples") {
  const Depth d{2, 2};
  const HaarSpectrum2D b = haar_basis(kR0, d);
  CHECK(sigma_k(b, {0, 0}) == haar_basis(kSquare, d));
  CHECK(sigma_k(b, {1, 1}) == b);
  CHECK(sigma_k(b, {2, 2}) == b);
  CHECK(sigma_k(-1.0 * b, {0, 0}) == haar_basis(kSquare, d));
}

TEST_CASE("sigma_k isometry and square function truncation") {
  Rng rng(23);
  const Depth d{3, 3};
  for (int trial = 0; trial < 5; ++trial) {
    const HaarSpectrum2D b = oracle::random_spectrum(rng, d);
    for (int k1 = 0; k1 <= 3; ++k1) {
      for (int k2 = 0; k2 <= 3; ++k2) {
        const HaarSpectrum2D s = sigma_k(b, {k1, k2});
        CHECK(std::abs(s.norm_sq() - b.hh_norm_sq()) <= 1e-12 * b.hh_norm_sq());
        const GridFunction2D lhs = square_function_sq(s);
        const GridFunction2D rhs = block_average(square_function_sq(b), {k1, k2});
        CHECK(max_abs_difference(lhs, rhs) <= 1e-12 * (1.0 + b.hh_norm_sq() * 64));
      }
    }
  }
}

TEST_CASE("sigma_k operator identity on a sample") {
  Rng rng(24);
  const Depth d{3, 3};
  const HaarSpectrum2D b = oracle::random_hh_spectrum(rng, d);
  for (const GenerationIndex k : {GenerationIndex{0, 0}, GenerationIndex{1, 2}, GenerationIndex{3, 1}}) {
    const double lhs = operator_norm(pi_after_expectation(b, k));
    const double rhs = operator_norm(pi_operator(sigma_k(b, k)));
    CHECK(std::abs(lhs - rhs) <= 1e-8);
  }
}

TEST_CASE("sigma1_k") {
  const Depth d{2, 2};
  const DyadicRect fine_s{DyadicInterval(1, 1), DyadicInterval(1, 0)};
  const HaarSpectrum2D b = -2.0 * haar_basis(fine_s, d);
  CHECK(sigma1_k(b, 0) == 2.0 * haar_basis({kUnit, DyadicInterval(1, 0)}, d));
  CHECK(sigma1_k(b, 2) == b);
  CHECK(sigma1_k(b, 5) == b);
  Rng rng(25);
  const HaarSpectrum2D r = oracle::random_spectrum(rng, {3, 3});
  for (int k = 0; k <= 3; ++k) {
    CHECK(std::abs(sigma1_k(r, k).norm_sq() - r.hh_norm_sq()) <= 1e-12 * r.hh_norm_sq());
  }
  // One-parameter operator identity with the s-only conditional expectation.
  const HaarSpectrum2D hb = r.hh_part();
  for (int k = 0; k <= 3; ++k) {
    const DenseOperator lhs = assemble(
        [&](const HaarSpectrum2D& c) {
          return haar_forward_2d(paraproduct(Signature::pi(), hb, haar_inverse_2d(conditional_expectation(c, {k, 3}))));
        },
        hb.depth());
    CHECK(std::abs(operator_norm(lhs) - operator_norm(pi_operator(sigma1_k(hb, k)))) <= 1e-8);
  }
}

TEST_CASE("nine part examples") {
  const Depth d{2, 2};
  const HaarSpectrum2D h = haar_basis(kSquare, d);
  const GridFunction2D hf = haar_inverse_2d(h);
  CHECK(max_abs_difference(nine_part_apply({Relation::equal, Relation::equal}, h, hf), GridFunction2D::zeros(d)) <=
        1e-15);
  CHECK(max_abs_difference(nine_part_apply({Relation::finer, Relation::equal}, h, hf), GridFunction2D::zeros(d)) <=
        1e-15);
  CHECK(part_name({Relation::coarser, Relation::equal}) == "Delta_R");
  CHECK(parse_part_name("R_Pi") == NinePartTag{Relation::equal, Relation::finer});
  CHECK_THROWS_AS(parse_part_name("nope"), ValidationError);
}

TEST_CASE("nine parts match the block classification of the product") {
  Rng rng(26);
  for (const Depth d : {Depth{2, 2}, Depth{2, 3}}) {
    const HaarSpectrum2D phi = oracle::random_hh_spectrum(rng, d);
    const GridFunction2D f = hh_grid(rng, d);
    GridFunction2D sum = GridFunction2D::zeros(d);
    for (const NinePartTag& tag : all_nine_part_tags()) {
      const GridFunction2D part = nine_part_apply(tag, phi, f);
      INFO(part_name(tag));
      CHECK(max_abs_difference(part, oracle::classified_product_part(tag, phi, f)) <= 1e-11);
      sum = sum + part;
    }
    CHECK(max_abs_difference(sum, pointwise_product(haar_inverse_2d(phi), f)) <= 1e-10);
  }
}

TEST_CASE("alternative Delta_R profile does not match its block") {
  // The (coarser, equal) block carries chi_I/|I| in s; the alternative profile
  // puts the indicator in t instead. Record that the two differ.
  Rng rng(27);
  const Depth d{2, 2};
  const HaarSpectrum2D phi = oracle::random_hh_spectrum(rng, d);
  const GridFunction2D f = hh_grid(rng, d);
  const GridFunction2D block = nine_part_apply({Relation::coarser, Relation::equal}, phi, f);
  const GridFunction2D alt = delta_r_alternative_apply(phi, f);
  const GridFunction2D swapped = nine_part_apply({Relation::equal, Relation::coarser}, phi, f);
  MESSAGE("alternative vs (coarser,equal) block: " << max_abs_difference(block, alt));
  MESSAGE("alternative vs (equal,coarser) block: " << max_abs_difference(swapped, alt));
  CHECK(max_abs_difference(block, alt) > 1e-3);
  CHECK(max_abs_difference(swapped, alt) > 1e-3);
}

TEST_CASE("Delta paraproduct ignores rectangles with a full side") {
  // Delta_phi h_R is a multiple of chi_R / |R|, which is constant in a variable
  // whenever a side of R is the whole interval.
  const Depth d{3, 3};
  const std::vector<HaarSpectrum2D> probes = experiments::delta_probe_set(d);
  CHECK(probes.size() == 20);
  CHECK(experiments::delta_ratio(haar_basis(kSquare, d), probes) == 0.0);
  CHECK(experiments::delta_ratio(haar_basis({DyadicInterval(2, 1), DyadicInterval(0, 0)}, d), probes) == 0.0);
  CHECK(experiments::delta_ratio(haar_basis({DyadicInterval(1, 1), DyadicInterval(1, 0)}, d), probes) > 0.0);
}
