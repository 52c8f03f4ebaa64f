#ifndef FRACDQ_DQWEIGHTS_HPP
#define FRACDQ_DQWEIGHTS_HPP

#include <span>
#include <vector>

#include "fracdq/densela.hpp"
#include "fracdq/kernels.hpp"
#include "fracdq/quadrature.hpp"

namespace fracdq {

/// Strictly increasing nodes a = x_0 < ... < x_M = b.
class Grid {
 public:
  /// Arbitrary node set. Throws InvalidParameter unless there are at least
  /// two nodes, all finite and strictly increasing.
  explicit Grid(std::vector<double> nodes);

  double a() const noexcept { return nodes_.front(); }
  double b() const noexcept { return nodes_.back(); }
  double length() const noexcept { return b() - a(); }
  /// Number of intervals; there are M + 1 nodes.
  int M() const noexcept { return static_cast<int>(nodes_.size()) - 1; }
  std::span<const double> nodes() const noexcept { return nodes_; }
  double operator[](std::size_t i) const noexcept { return nodes_[i]; }

 private:
  std::vector<double> nodes_;
};

/// x_i = 0.5 (1 - cos(i pi / M)) (b - a) + a, with both ends set exactly.
/// Throws InvalidParameter if M < 2 or a >= b.
Grid chebyshev_grid(double a, double b, int M);

/// Entry (k, j) is phi_k(x_j). Symmetric.
DenseMatrix interpolation_matrix(const Kernel& kernel, const Grid& grid);

/// Left (A) and right (B) fractional differentiation matrices on a grid.
struct WeightSet {
  double alpha = 0.0;
  DenseMatrix A;
  DenseMatrix B;
  /// max_i of ||Phi w_i - rhs_i||_inf over both sides.
  double residual_inf = 0.0;
  /// 1-norm condition estimate of the interpolation matrix.
  double condition = 0.0;
};

/**
 * Solves Phi w_i = [D^alpha phi_k(x_i)]_k for every node i and both sides,
 * sharing a single LU factorization of the interpolation matrix Phi.
 *
 * Throws InvalidParameter if alpha is outside (1, 2] or the rule does not
 * have mu = 1 - alpha, SingularMatrix if Phi cannot be factored.
 */
WeightSet compute_weights(const Kernel& kernel, const Grid& grid, double alpha,
                          const JacobiRule& rule);

/// W s. Throws DimensionMismatch.
std::vector<double> apply_weights(const DenseMatrix& W,
                                  std::span<const double> samples);

}  // namespace fracdq

#endif  // FRACDQ_DQWEIGHTS_HPP
