#include "dyadic/dense_operator.hpp"

#include <algorithm>
#include <cmath>

#include "dyadic/error.hpp"
#include "dyadic/random.hpp"

namespace dyadic {

BasisOrder::BasisOrder(Depth depth) : depth_(depth) {
  validate_depth(depth);
  const int rows = depth.cells_s();
  const int cols = depth.cells_t();
  entries_.reserve(static_cast<std::size_t>(rows * cols));
  entries_.emplace_back(0, 0);
  for (int p = 1; p < rows; ++p) entries_.emplace_back(p, 0);
  for (int q = 1; q < cols; ++q) entries_.emplace_back(0, q);
  for (int l1 = 0; l1 < depth.s; ++l1) {
    for (int l2 = 0; l2 < depth.t; ++l2) {
      for (int i1 = 0; i1 < (1 << l1); ++i1) {
        for (int i2 = 0; i2 < (1 << l2); ++i2) entries_.emplace_back((1 << l1) + i1, (1 << l2) + i2);
      }
    }
  }
  positions_.assign(entries_.size(), 0);
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    const auto [p, q] = entries_[k];
    positions_[static_cast<std::size_t>(p) * cols + q] = static_cast<int>(k);
  }
}

Eigen::VectorXd BasisOrder::to_vector(const HaarSpectrum2D& c) const {
  require_same_depth(c.depth(), depth_);
  Eigen::VectorXd v(size());
  for (int k = 0; k < size(); ++k) {
    const auto [p, q] = entries_[static_cast<std::size_t>(k)];
    v[k] = c(p, q);
  }
  return v;
}

HaarSpectrum2D BasisOrder::to_spectrum(const Eigen::VectorXd& v) const {
  if (v.size() != size()) throw ValidationError("coefficient vector length does not match basis");
  std::vector<double> m(static_cast<std::size_t>(size()));
  for (int k = 0; k < size(); ++k) {
    const auto [p, q] = entries_[static_cast<std::size_t>(k)];
    m[static_cast<std::size_t>(p) * depth_.cells_t() + q] = v[k];
  }
  return {depth_, std::move(m)};
}

DenseOperator::DenseOperator(Depth depth, Eigen::MatrixXd matrix)
    : depth_(depth), matrix_(std::move(matrix)) {
  validate_depth(depth_);
  if (matrix_.rows() != depth_.cell_count() || matrix_.cols() != depth_.cell_count()) {
    throw ValidationError("operator matrix must be square of size " + std::to_string(depth_.cell_count()));
  }
  if (!matrix_.allFinite()) throw NonFiniteError("operator produced non-finite values");
}

HaarSpectrum2D DenseOperator::apply(const HaarSpectrum2D& c) const {
  const BasisOrder order(depth_);
  return order.to_spectrum(matrix_ * order.to_vector(c));
}

GridFunction2D DenseOperator::apply(const GridFunction2D& f) const {
  return haar_inverse_2d(apply(haar_forward_2d(f)));
}

DenseOperator assemble(const SpectrumMap& op, Depth depth) {
  const BasisOrder order(depth);
  Eigen::MatrixXd m(order.size(), order.size());
  for (int k = 0; k < order.size(); ++k) {
    HaarSpectrum2D e(depth);
    const auto [p, q] = order.heap_pair(k);
    e(p, q) = 1.0;
    HaarSpectrum2D image(depth);
    try {
      image = op(e);
    } catch (const NonFiniteError&) {
      throw NonFiniteError("operator produced non-finite values");
    }
    require_same_depth(image.depth(), depth);
    m.col(k) = order.to_vector(image);
  }
  if (!m.allFinite()) throw NonFiniteError("operator produced non-finite values");
  return {depth, std::move(m)};
}

DenseOperator assemble_grid_map(const GridMap& op, Depth depth) {
  return assemble([&op](const HaarSpectrum2D& c) { return haar_forward_2d(op(haar_inverse_2d(c))); },
                  depth);
}

DenseOperator identity_operator(Depth depth) {
  validate_depth(depth);
  return {depth, Eigen::MatrixXd::Identity(depth.cell_count(), depth.cell_count())};
}

DenseOperator compose(const DenseOperator& a, const DenseOperator& b) {
  require_same_depth(a.depth(), b.depth());
  return {a.depth(), a.matrix() * b.matrix()};
}

Eigen::MatrixXd commutator(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
    throw ValidationError("commutator needs square matrices of equal size");
  }
  return a * b - b * a;
}

DenseOperator commutator(const DenseOperator& a, const DenseOperator& b) {
  require_same_depth(a.depth(), b.depth());
  return {a.depth(), commutator(a.matrix(), b.matrix())};
}

namespace {

struct Run {
  double rayleigh = 0.0;
  int iterations = 0;
  bool converged = false;
};

Run power_run(const Eigen::MatrixXd& a, Eigen::VectorXd x, const OperatorNormOptions& options) {
  Run run;
  double norm = x.norm();
  if (norm == 0.0) return run;
  x /= norm;
  double previous = -1.0;
  for (int it = 1; it <= options.max_iterations; ++it) {
    const Eigen::VectorXd ax = a * x;
    const double rayleigh = ax.squaredNorm();
    run.rayleigh = std::max(run.rayleigh, rayleigh);
    run.iterations = it;
    Eigen::VectorXd next = a.transpose() * ax;
    norm = next.norm();
    if (norm == 0.0 || rayleigh == 0.0) {
      run.converged = true;
      return run;
    }
    x = next / norm;
    if (previous >= 0.0 && std::abs(rayleigh - previous) <= options.tolerance * rayleigh) {
      run.converged = true;
      return run;
    }
    previous = rayleigh;
  }
  return run;
}

}  // namespace

PowerIterationResult power_iteration_norm(const Eigen::MatrixXd& a, const OperatorNormOptions& options) {
  const Eigen::Index n = a.cols();
  if (n == 0) return {0.0, 0, true};
  // Deterministic start: a fixed pseudo-random vector, then one random restart.
  Rng fixed(0x5EEDu);
  Rng restart(0xBADC0FFEEu);
  Eigen::VectorXd x0(n), x1(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    x0[i] = 1.0 + 0.5 * fixed.uniform();
    x1[i] = restart.normal();
  }
  const Run r0 = power_run(a, x0, options);
  const Run r1 = power_run(a, x1, options);
  const Run& best = r1.rayleigh > r0.rayleigh ? r1 : r0;
  return {std::sqrt(best.rayleigh), r0.iterations + r1.iterations, r0.converged && r1.converged};
}

double operator_norm(const Eigen::MatrixXd& a, const OperatorNormOptions& options) {
  if (!a.allFinite()) throw NonFiniteError("operator produced non-finite values");
  if (a.size() == 0) return 0.0;
  if (std::max(a.rows(), a.cols()) <= options.svd_limit) {
    OperatorNormOptions quick = options;
    quick.max_iterations = std::min(options.max_iterations, 50);
    const PowerIterationResult power = power_iteration_norm(a, quick);
    const Eigen::MatrixXd gram = a.transpose() * a;
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram, Eigen::EigenvaluesOnly);
    const double exact = std::sqrt(std::max(eig.eigenvalues().maxCoeff(), 0.0));
    // A Rayleigh quotient can never exceed the top singular value.
    if (power.value > exact * (1.0 + 1e-8) + 1e-150) {
      throw std::logic_error("power iteration exceeded the singular value bound");
    }
    return exact;
  }
  const PowerIterationResult power = power_iteration_norm(a, options);
  if (!power.converged) {
    throw NonConvergenceError("operator norm power iteration did not converge", power.value);
  }
  return power.value;
}

double operator_norm(const DenseOperator& a, const OperatorNormOptions& options) {
  return operator_norm(a.matrix(), options);
}

}  // namespace dyadic
