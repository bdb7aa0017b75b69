#pragma once

#include <array>
#include <string>
#include <vector>

#include "dyadic/error.hpp"
#include "dyadic/grid.hpp"
#include "dyadic/haar.hpp"

namespace dyadic {

/// Exponent triple of the bilinear form sum_R phi_R <f, h^delta_R> h^beta_R,
/// where h^0_I = h_I and h^1_I = chi_I / |I|.
struct Signature {
  std::array<int, 2> eps{0, 0};
  std::array<int, 2> delta{1, 1};
  std::array<int, 2> beta{0, 0};

  static Signature from_beta(int beta_s, int beta_t);
  static Signature pi() { return from_beta(0, 0); }
  static Signature delta_type() { return from_beta(1, 1); }
  static Signature mixed01() { return from_beta(0, 1); }
  static Signature mixed10() { return from_beta(1, 0); }

  bool supported() const noexcept;
  std::string name() const;

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Parses "pi", "delta", "01", "10" (or the beta pattern "00", "11").
Signature parse_signature(const std::string& text);

class UnsupportedSignature : public ValidationError {
 public:
  explicit UnsupportedSignature(const Signature& sig);
};

/// Heap-indexed tables of averages used by the paraproduct family. Only the
/// hh entries (p, q > 0) are populated.
namespace means {
/// (p, q) -> m_R f for R = I_p x J_q.
std::vector<double> rect(const GridFunction2D& f);
/// (p, q) -> m_I(f_J), the s-average over I of the t-Haar coefficient f_J(s).
std::vector<double> s_avg_of_t_coeff(const GridFunction2D& f);
/// (p, q) -> m_J(f_I), the t-average over J of the s-Haar coefficient f_I(t).
std::vector<double> t_avg_of_s_coeff(const GridFunction2D& f);
}  // namespace means

GridFunction2D paraproduct(const Signature& sig, const HaarSpectrum2D& phi, const GridFunction2D& f);

/// Coefficient rearrangement with || Pi_b E_k || = || Pi_{sigma_k b} || (hh block only).
HaarSpectrum2D sigma_k(const HaarSpectrum2D& b, GenerationIndex k);

/// One-parameter analogue aggregating the s-variable at level k.
HaarSpectrum2D sigma1_k(const HaarSpectrum2D& b, int k);

}  // namespace dyadic
