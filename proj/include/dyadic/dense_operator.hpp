#pragma once

#include <Eigen/Dense>
#include <functional>
#include <utility>
#include <vector>

#include "dyadic/grid.hpp"
#include "dyadic/haar.hpp"

namespace dyadic {

/// Enumeration of the tensor Haar basis: cc, then hc in heap order, then ch
/// in heap order, then hh ordered by (s-level, t-level, s-index, t-index).
class BasisOrder {
 public:
  explicit BasisOrder(Depth depth);

  Depth depth() const noexcept { return depth_; }
  int size() const noexcept { return static_cast<int>(entries_.size()); }
  /// Heap pair (p, q) at a basis position.
  std::pair<int, int> heap_pair(int position) const { return entries_[static_cast<std::size_t>(position)]; }
  int position(int p, int q) const {
    return positions_[static_cast<std::size_t>(p) * depth_.cells_t() + q];
  }

  Eigen::VectorXd to_vector(const HaarSpectrum2D& c) const;
  HaarSpectrum2D to_spectrum(const Eigen::VectorXd& v) const;

 private:
  Depth depth_;
  std::vector<std::pair<int, int>> entries_;
  std::vector<int> positions_;
};

/// Matrix of a linear map in the BasisOrder enumeration.
class DenseOperator {
 public:
  DenseOperator(Depth depth, Eigen::MatrixXd matrix);

  Depth depth() const noexcept { return depth_; }
  const Eigen::MatrixXd& matrix() const noexcept { return matrix_; }
  int dimension() const noexcept { return static_cast<int>(matrix_.rows()); }

  HaarSpectrum2D apply(const HaarSpectrum2D& c) const;
  GridFunction2D apply(const GridFunction2D& f) const;

  DenseOperator adjoint() const { return {depth_, matrix_.transpose()}; }

 private:
  Depth depth_;
  Eigen::MatrixXd matrix_;
};

using SpectrumMap = std::function<HaarSpectrum2D(const HaarSpectrum2D&)>;
using GridMap = std::function<GridFunction2D(const GridFunction2D&)>;

DenseOperator assemble(const SpectrumMap& op, Depth depth);
DenseOperator assemble_grid_map(const GridMap& op, Depth depth);

DenseOperator identity_operator(Depth depth);
DenseOperator compose(const DenseOperator& a, const DenseOperator& b);
DenseOperator commutator(const DenseOperator& a, const DenseOperator& b);
Eigen::MatrixXd commutator(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

struct OperatorNormOptions {
  double tolerance = 1e-10;
  int max_iterations = 10000;
  /// Dimensions up to this size are decided by a dense eigendecomposition of A^T A.
  int svd_limit = 256;
};

double operator_norm(const Eigen::MatrixXd& a, const OperatorNormOptions& options = {});
double operator_norm(const DenseOperator& a, const OperatorNormOptions& options = {});

struct PowerIterationResult {
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Largest singular value by power iteration on A^T A from a fixed start and
/// one random restart; the larger Rayleigh quotient wins.
PowerIterationResult power_iteration_norm(const Eigen::MatrixXd& a, const OperatorNormOptions& options = {});

}  // namespace dyadic
