#include "dyadic/paraproduct.hpp"

#include <cmath>

#include "dyadic/prefix_table.hpp"

namespace dyadic {

Signature Signature::from_beta(int beta_s, int beta_t) {
  return {{0, 0}, {1 - beta_s, 1 - beta_t}, {beta_s, beta_t}};
}

bool Signature::supported() const noexcept {
  const auto bit = [](int v) { return v == 0 || v == 1; };
  for (int j = 0; j < 2; ++j) {
    if (eps[j] != 0 || !bit(beta[j]) || delta[j] != 1 - beta[j]) return false;
  }
  return true;
}

std::string Signature::name() const {
  std::string s = "eps=" + std::to_string(eps[0]) + std::to_string(eps[1]);
  s += " delta=" + std::to_string(delta[0]) + std::to_string(delta[1]);
  s += " beta=" + std::to_string(beta[0]) + std::to_string(beta[1]);
  return s;
}

Signature parse_signature(const std::string& text) {
  if (text == "pi" || text == "00") return Signature::pi();
  if (text == "delta" || text == "11") return Signature::delta_type();
  if (text == "01" || text == "pi01") return Signature::mixed01();
  if (text == "10" || text == "pi10") return Signature::mixed10();
  throw ValidationError("unknown signature '" + text + "' (expected pi, delta, 01 or 10)");
}

UnsupportedSignature::UnsupportedSignature(const Signature& sig)
    : ValidationError("unsupported signature: " + sig.name()) {}

namespace means {

std::vector<double> rect(const GridFunction2D& f) {
  const Depth d = f.depth();
  const PrefixTable table(f);
  std::vector<double> out(static_cast<std::size_t>(d.cell_count()), 0.0);
  for (int p = 1; p < d.cells_s(); ++p) {
    const CellRange s = CellRange::of(DyadicInterval::from_heap(p), d.s);
    for (int q = 1; q < d.cells_t(); ++q) {
      out[static_cast<std::size_t>(p) * d.cells_t() + q] =
          table.mean(s, CellRange::of(DyadicInterval::from_heap(q), d.t));
    }
  }
  return out;
}

std::vector<double> s_avg_of_t_coeff(const GridFunction2D& f) {
  const Depth d = f.depth();
  const std::vector<double> partial = partial_forward_t(f);
  const PrefixTable table(d.cells_s(), d.cells_t(), partial);
  std::vector<double> out(static_cast<std::size_t>(d.cell_count()), 0.0);
  for (int p = 1; p < d.cells_s(); ++p) {
    const CellRange s = CellRange::of(DyadicInterval::from_heap(p), d.s);
    for (int q = 1; q < d.cells_t(); ++q) {
      out[static_cast<std::size_t>(p) * d.cells_t() + q] = table.mean(s, {q, q + 1});
    }
  }
  return out;
}

std::vector<double> t_avg_of_s_coeff(const GridFunction2D& f) {
  const Depth d = f.depth();
  const std::vector<double> partial = partial_forward_s(f);
  const PrefixTable table(d.cells_s(), d.cells_t(), partial);
  std::vector<double> out(static_cast<std::size_t>(d.cell_count()), 0.0);
  for (int p = 1; p < d.cells_s(); ++p) {
    for (int q = 1; q < d.cells_t(); ++q) {
      out[static_cast<std::size_t>(p) * d.cells_t() + q] =
          table.mean({p, p + 1}, CellRange::of(DyadicInterval::from_heap(q), d.t));
    }
  }
  return out;
}

}  // namespace means

GridFunction2D paraproduct(const Signature& sig, const HaarSpectrum2D& phi, const GridFunction2D& f) {
  if (!sig.supported()) throw UnsupportedSignature(sig);
  require_same_depth(phi.depth(), f.depth());
  std::vector<double> pairing;
  if (sig.beta == std::array{0, 0}) {
    pairing = means::rect(f);
  } else if (sig.beta == std::array{1, 1}) {
    const HaarSpectrum2D fc = haar_forward_2d(f);
    pairing.assign(fc.heap_matrix().begin(), fc.heap_matrix().end());
  } else if (sig.beta == std::array{0, 1}) {
    pairing = means::s_avg_of_t_coeff(f);
  } else {
    pairing = means::t_avg_of_s_coeff(f);
  }
  for (std::size_t i = 0; i < pairing.size(); ++i) pairing[i] *= phi.heap_matrix()[i];
  const auto kind = [](int beta) { return beta == 0 ? AxisKind::haar : AxisKind::indicator; };
  return separable_synthesis(f.depth(), pairing, kind(sig.beta[0]), kind(sig.beta[1]));
}

namespace {

// Sum of squares of b over all (p', q') with p' in the subtree of p (or p' = p
// if !sub_s), likewise for q.
double subtree_sq(const HaarSpectrum2D& b, int p, int q, bool sub_s, bool sub_t) {
  const Depth d = b.depth();
  double sum = 0.0;
  const int ls = heap_level(p);
  const int lt = heap_level(q);
  const int s_end_level = sub_s ? d.s : ls + 1;
  const int t_end_level = sub_t ? d.t : lt + 1;
  for (int ms = ls; ms < s_end_level; ++ms) {
    for (int pp = p << (ms - ls); pp < (p + 1) << (ms - ls); ++pp) {
      for (int mt = lt; mt < t_end_level; ++mt) {
        for (int qq = q << (mt - lt); qq < (q + 1) << (mt - lt); ++qq) sum += b(pp, qq) * b(pp, qq);
      }
    }
  }
  return sum;
}

}  // namespace

HaarSpectrum2D sigma_k(const HaarSpectrum2D& b, GenerationIndex k) {
  if (k.j1 < 0 || k.j2 < 0) throw ValidationError("generation index must be non-negative");
  HaarSpectrum2D out(b.depth());
  for (int p = 1; p < b.rows(); ++p) {
    const int l1 = heap_level(p);
    if (l1 > k.j1) continue;
    for (int q = 1; q < b.cols(); ++q) {
      const int l2 = heap_level(q);
      if (l2 > k.j2) continue;
      if (l1 < k.j1 && l2 < k.j2) {
        out(p, q) = b(p, q);
      } else {
        out(p, q) = std::sqrt(subtree_sq(b, p, q, l1 == k.j1, l2 == k.j2));
      }
    }
  }
  return out;
}

HaarSpectrum2D sigma1_k(const HaarSpectrum2D& b, int k) {
  if (k < 0) throw ValidationError("generation index must be non-negative");
  HaarSpectrum2D out(b.depth());
  for (int p = 1; p < b.rows(); ++p) {
    const int l1 = heap_level(p);
    if (l1 > k) continue;
    for (int q = 1; q < b.cols(); ++q) {
      out(p, q) = l1 < k ? b(p, q) : std::sqrt(subtree_sq(b, p, q, true, false));
    }
  }
  return out;
}

}  // namespace dyadic
