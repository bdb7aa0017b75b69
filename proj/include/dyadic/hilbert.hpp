#pragma once

#include <cstdint>
#include <numbers>
#include <vector>

namespace dyadic {

/// Compactly supported step function: value[k] on [breakpoints[k], breakpoints[k+1]), zero elsewhere.
class StepFunction1D {
 public:
  StepFunction1D() = default;
  StepFunction1D(std::vector<double> breakpoints, std::vector<double> values);

  static StepFunction1D indicator(double a, double b);

  const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }
  const std::vector<double>& values() const noexcept { return values_; }
  bool empty() const noexcept { return values_.empty(); }

  double operator()(double x) const;
  /// Antiderivative F(x) = integral of f over (-inf, x].
  double antiderivative(double x) const;
  double integral(double a, double b) const { return antiderivative(b) - antiderivative(a); }
  double l2_norm_sq() const;
  bool is_breakpoint(double x) const;

 private:
  std::vector<double> breakpoints_;
  std::vector<double> values_;
  std::vector<double> cumulative_;  ///< F at each breakpoint
};

/// Translated and dilated dyadic system: the level-j intervals are
/// r * (2^-j [k, k+1) + x_j) with x_j = sum_{i=j+1}^{K_fine+1} bit_i 2^-i.
struct RandomDyadicGrid {
  int k_coarse = 0;
  int k_fine = 0;
  double r = 1.0;
  /// bits[i + k_coarse] holds bit_i for i in [-k_coarse, k_fine + 1].
  std::vector<int> bits;

  int bit(int level) const { return bits[static_cast<std::size_t>(level + k_coarse)]; }
  /// Offset x_j in units of 2^-(k_fine + 3).
  std::int64_t offset_units(int level) const;
  /// Half-width of the window [-L, L] with L = 2^k_coarse.
  double window() const;
};

/// Bits are drawn per level from streams derived from the seed, so grids with
/// different level ranges share their common bits. r = 2^u, u uniform on [0,1).
RandomDyadicGrid sample_grid(std::uint64_t seed, int k_coarse, int k_fine);

/// Normalization of the shift average: H f = c * int_1^2 E[S^{alpha,r} f] dr / r.
inline constexpr double kShiftAverageConstant = 4.0 * std::numbers::sqrt2 / std::numbers::pi;

/// (S^{alpha,r} f)(x) summed over levels [-k_coarse, k_fine].
double grid_shift_value(const StepFunction1D& f, const RandomDyadicGrid& g, double x);

struct GridShiftResult {
  StepFunction1D image;
  /// ||f - E f||_2 with E the average over the level k_fine + 1 intervals;
  /// the shift only sees E f.
  double projection_error = 0.0;
};

/// S^{alpha,r} f = sum_I <f, h_I> (h_{I+} - h_{I-}) over the grid's level range.
GridShiftResult grid_shift_apply(const StepFunction1D& f, const RandomDyadicGrid& g);

struct McEstimate {
  double x = 0.0;
  double estimate = 0.0;
  double stderr_ = 0.0;
};

struct McOptions {
  int k_coarse = 12;
  int k_fine = 12;
};

/// Monte-Carlo average of grid shifts approximating the Hilbert transform.
std::vector<McEstimate> mc_hilbert(const StepFunction1D& f, const std::vector<double>& xs, int n_samples,
                                   std::uint64_t seed, const McOptions& options = {});

/// (1/pi) sum over pieces of value * ln|(x - a)/(x - b)|.
double analytic_hilbert_step(const StepFunction1D& f, double x);

/// Pairwise (cascade) summation.
double pairwise_sum(const double* data, std::size_t n);

}  // namespace dyadic
