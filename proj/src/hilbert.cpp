#include "dyadic/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "dyadic/error.hpp"
#include "dyadic/random.hpp"

namespace dyadic {

StepFunction1D::StepFunction1D(std::vector<double> breakpoints, std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (breakpoints_.empty() && values_.empty()) return;
  if (breakpoints_.size() != values_.size() + 1) {
    throw ValidationError("step function needs one more breakpoint than values");
  }
  for (std::size_t k = 0; k < breakpoints_.size(); ++k) {
    if (!std::isfinite(breakpoints_[k])) throw NonFiniteError("breakpoints must be finite");
    if (k > 0 && !(breakpoints_[k] > breakpoints_[k - 1])) {
      throw ValidationError("breakpoints must be strictly increasing");
    }
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw NonFiniteError("step values must be finite");
  }
  cumulative_.assign(breakpoints_.size(), 0.0);
  for (std::size_t k = 0; k < values_.size(); ++k) {
    cumulative_[k + 1] = cumulative_[k] + values_[k] * (breakpoints_[k + 1] - breakpoints_[k]);
  }
}

StepFunction1D StepFunction1D::indicator(double a, double b) { return {{a, b}, {1.0}}; }

double StepFunction1D::operator()(double x) const {
  if (values_.empty() || x < breakpoints_.front() || x >= breakpoints_.back()) return 0.0;
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  return values_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

double StepFunction1D::antiderivative(double x) const {
  if (values_.empty() || x <= breakpoints_.front()) return 0.0;
  if (x >= breakpoints_.back()) return cumulative_.back();
  const auto k = static_cast<std::size_t>(std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x) -
                                          breakpoints_.begin()) - 1;
  return cumulative_[k] + values_[k] * (x - breakpoints_[k]);
}

double StepFunction1D::l2_norm_sq() const {
  double sum = 0.0;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    sum += values_[k] * values_[k] * (breakpoints_[k + 1] - breakpoints_[k]);
  }
  return sum;
}

bool StepFunction1D::is_breakpoint(double x) const {
  return std::binary_search(breakpoints_.begin(), breakpoints_.end(), x);
}

std::int64_t RandomDyadicGrid::offset_units(int level) const {
  // 2^-i = 2^(k_fine + 3 - i) units.
  std::int64_t units = 0;
  for (int i = level + 1; i <= k_fine + 1; ++i) {
    if (bit(i)) units += std::int64_t{1} << (k_fine + 3 - i);
  }
  return units;
}

double RandomDyadicGrid::window() const { return std::ldexp(1.0, k_coarse); }

RandomDyadicGrid sample_grid(std::uint64_t seed, int k_coarse, int k_fine) {
  if (k_coarse < 1 || k_fine < 1) throw ValidationError("level bounds must be at least 1");
  if (k_coarse + k_fine > 48) throw ValidationError("level range too wide");
  RandomDyadicGrid g;
  g.k_coarse = k_coarse;
  g.k_fine = k_fine;
  Rng dilation(derive_seed(seed, 0xD11A7E));
  g.r = std::exp2(dilation.uniform());
  for (int i = -k_coarse; i <= k_fine + 1; ++i) {
    Rng level_rng(derive_seed(seed, static_cast<std::uint64_t>(static_cast<std::int64_t>(i) + (1 << 20))));
    g.bits.push_back(level_rng.bit());
  }
  return g;
}

namespace {

// Level-j interval of the grid as integer endpoints in units u = 2^-(k_fine+3),
// before scaling by r.
struct UnitInterval {
  std::int64_t start;
  std::int64_t length;
};

UnitInterval containing(const RandomDyadicGrid& g, int level, double x_scaled_units) {
  const std::int64_t length = std::int64_t{1} << (g.k_fine + 3 - level);
  const std::int64_t offset = g.offset_units(level);
  const auto k = static_cast<std::int64_t>(std::floor((x_scaled_units - static_cast<double>(offset)) /
                                                      static_cast<double>(length)));
  return {offset + k * length, length};
}

double unit_scale(const RandomDyadicGrid& g) { return g.r * std::ldexp(1.0, -(g.k_fine + 3)); }

// <f, h_I> for I = [a, a + len) in real coordinates.
double haar_coefficient(const StepFunction1D& f, double a, double len) {
  const double mid = a + 0.5 * len;
  return (f.integral(mid, a + len) - f.integral(a, mid)) / std::sqrt(len);
}

void check_window(const StepFunction1D& f, const RandomDyadicGrid& g) {
  if (f.empty()) return;
  const double w = g.window();
  if (f.breakpoints().front() < -w || f.breakpoints().back() > w) throw ValidationError("window overflow");
}

}  // namespace

double grid_shift_value(const StepFunction1D& f, const RandomDyadicGrid& g, double x) {
  if (f.is_breakpoint(x)) throw ValidationError("evaluation at jump");
  check_window(f, g);
  if (f.empty()) return 0.0;
  const double scale = unit_scale(g);
  const double xu = x / scale;
  double total = 0.0;
  for (int j = -g.k_coarse; j <= g.k_fine; ++j) {
    const UnitInterval iv = containing(g, j, xu);
    const double a = static_cast<double>(iv.start) * scale;
    const double len = static_cast<double>(iv.length) * scale;
    const double c = haar_coefficient(f, a, len);
    if (c == 0.0) continue;
    const std::int64_t half = iv.length / 2;
    const bool right = xu >= static_cast<double>(iv.start + half);
    const std::int64_t k_start = right ? iv.start + half : iv.start;
    const bool upper = xu >= static_cast<double>(k_start + half / 2);
    const double hk = (upper ? 1.0 : -1.0) / std::sqrt(0.5 * len);
    total += c * (right ? 1.0 : -1.0) * hk;
  }
  return total;
}

GridShiftResult grid_shift_apply(const StepFunction1D& f, const RandomDyadicGrid& g) {
  check_window(f, g);
  GridShiftResult out;
  if (f.empty()) return out;
  const double scale = unit_scale(g);
  std::map<std::int64_t, double> jumps;
  const auto add_haar = [&](std::int64_t start, std::int64_t length, double amplitude) {
    // amplitude * h_K with K = [start, start + length) in units.
    const double height = amplitude / std::sqrt(static_cast<double>(length) * scale);
    jumps[start] -= height;
    jumps[start + length / 2] += 2.0 * height;
    jumps[start + length] -= height;
  };
  for (int j = -g.k_coarse; j <= g.k_fine; ++j) {
    const std::int64_t length = std::int64_t{1} << (g.k_fine + 3 - j);
    std::int64_t previous = std::numeric_limits<std::int64_t>::min();
    for (double bp : f.breakpoints()) {
      const UnitInterval iv = containing(g, j, bp / scale);
      if (iv.start == previous) continue;
      previous = iv.start;
      const double c = haar_coefficient(f, static_cast<double>(iv.start) * scale,
                                        static_cast<double>(length) * scale);
      if (c == 0.0) continue;
      add_haar(iv.start + length / 2, length / 2, c);
      add_haar(iv.start, length / 2, -c);
    }
  }
  // Projection error onto level k_fine + 1 averages.
  {
    const std::int64_t length = std::int64_t{1} << 2;
    std::int64_t previous = std::numeric_limits<std::int64_t>::min();
    double err = 0.0;
    for (double bp : f.breakpoints()) {
      const UnitInterval iv = containing(g, g.k_fine + 1, bp / scale);
      if (iv.start == previous) continue;
      previous = iv.start;
      const double a = static_cast<double>(iv.start) * scale;
      const double len = static_cast<double>(length) * scale;
      const double mean = f.integral(a, a + len) / len;
      // integral of (f - mean)^2 over the interval, piece by piece.
      std::vector<double> cuts{a, a + len};
      for (double b : f.breakpoints()) {
        if (b > a && b < a + len) cuts.push_back(b);
      }
      std::ranges::sort(cuts);
      for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        const double v = f(0.5 * (cuts[k] + cuts[k + 1])) - mean;
        err += v * v * (cuts[k + 1] - cuts[k]);
      }
    }
    out.projection_error = std::sqrt(err);
  }
  std::vector<double> breakpoints;
  std::vector<double> values;
  double level = 0.0;
  for (const auto& [pos, delta] : jumps) {
    if (!breakpoints.empty()) values.push_back(level);
    breakpoints.push_back(static_cast<double>(pos) * scale);
    level += delta;
  }
  if (breakpoints.size() >= 2) out.image = StepFunction1D(std::move(breakpoints), std::move(values));
  return out;
}

double pairwise_sum(const double* data, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += data[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(data, half) + pairwise_sum(data + half, n - half);
}

std::vector<McEstimate> mc_hilbert(const StepFunction1D& f, const std::vector<double>& xs, int n_samples,
                                   std::uint64_t seed, const McOptions& options) {
  if (n_samples < 2) throw ValidationError("at least two samples are required");
  for (double x : xs) {
    if (f.is_breakpoint(x)) throw ValidationError("evaluation at jump");
  }
  const double weight = kShiftAverageConstant * std::numbers::ln2;
  std::vector<std::vector<double>> draws(xs.size(), std::vector<double>(static_cast<std::size_t>(n_samples)));
  for (int n = 0; n < n_samples; ++n) {
    const RandomDyadicGrid g = sample_grid(derive_seed(seed, static_cast<std::uint64_t>(n)), options.k_coarse,
                                           options.k_fine);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      draws[i][static_cast<std::size_t>(n)] = weight * grid_shift_value(f, g, xs[i]);
    }
  }
  std::vector<McEstimate> out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const auto& d = draws[i];
    const double mean = pairwise_sum(d.data(), d.size()) / n_samples;
    std::vector<double> sq(d.size());
    for (std::size_t k = 0; k < d.size(); ++k) sq[k] = (d[k] - mean) * (d[k] - mean);
    const double var = pairwise_sum(sq.data(), sq.size()) / (n_samples - 1);
    out.push_back({xs[i], mean, std::sqrt(var / n_samples)});
  }
  return out;
}

double analytic_hilbert_step(const StepFunction1D& f, double x) {
  if (f.is_breakpoint(x)) throw ValidationError("evaluation at jump");
  double total = 0.0;
  for (std::size_t k = 0; k < f.values().size(); ++k) {
    const double a = f.breakpoints()[k];
    const double b = f.breakpoints()[k + 1];
    total += f.values()[k] * std::log(std::abs((x - a) / (x - b)));
  }
  return total / std::numbers::pi;
}

}  // namespace dyadic
