#include "fracdq/dqweights.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fracdq/error.hpp"
#include "fracdq/fracops.hpp"

namespace fracdq {

Grid::Grid(std::vector<double> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.size() < 2) throw InvalidParameter("grid needs at least two nodes");
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!std::isfinite(nodes_[i])) throw InvalidParameter("grid nodes must be finite");
    if (i > 0 && !(nodes_[i] > nodes_[i - 1])) {
      throw InvalidParameter("grid nodes must be strictly increasing");
    }
  }
}

Grid chebyshev_grid(double a, double b, int M) {
  if (M < 2) throw InvalidParameter("chebyshev_grid: M must be >= 2, got " + std::to_string(M));
  if (!(a < b)) throw InvalidParameter("chebyshev_grid: requires a < b");
  const double ell = b - a;
  std::vector<double> x(static_cast<std::size_t>(M) + 1);
  for (int i = 0; i <= M; ++i) {
    x[static_cast<std::size_t>(i)] =
        0.5 * (1.0 - std::cos(static_cast<double>(i) * std::numbers::pi / M)) * ell + a;
  }
  x.front() = a;
  x.back() = b;
  return Grid(std::move(x));
}

DenseMatrix interpolation_matrix(const Kernel& kernel, const Grid& grid) {
  const std::size_t n = grid.nodes().size();
  DenseMatrix Phi(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) Phi(k, j) = kernel.eval(grid[j], grid[k]);
  }
  return Phi;
}

WeightSet compute_weights(const Kernel& kernel, const Grid& grid, double alpha,
                          const JacobiRule& rule) {
  const CaputoSide left(Side::Left, alpha, grid.a(), grid.b());
  const CaputoSide right(Side::Right, alpha, grid.a(), grid.b());
  if (alpha < 2.0 && (rule.lambda() != 0.0 || std::abs(rule.mu() - (1.0 - alpha)) > 1e-12)) {
    throw InvalidParameter("compute_weights: rule must have lambda = 0 and mu = 1 - alpha");
  }

  // Phi reaches condition numbers near 1e18 at the default shape parameters.
  // There the weights depend on the last bits of Phi itself, so the entries
  // are evaluated in long double and factored in extended precision.
  const DenseMatrix Phi = interpolation_matrix(kernel, grid);
  const std::size_t n = grid.nodes().size();
  std::vector<ExtendedReal> wide(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      wide[k * n + j] = static_cast<ExtendedReal>(kernel.eval_extended(grid[j], grid[k]));
    }
  }
  const ExtendedLUFactors F = lu_factor_in<ExtendedReal>(std::span<const ExtendedReal>(wide), n);
  if (F.singular()) {
    throw SingularMatrix("compute_weights: interpolation matrix is singular",
                         condition_estimate(Phi, F));
  }

  WeightSet W;
  W.alpha = alpha;
  W.A = DenseMatrix(n, n);
  W.B = DenseMatrix(n, n);
  W.condition = condition_estimate(Phi, F);

  std::vector<double> rhs(n);
  auto solve_row = [&](const CaputoSide& side, std::size_t i, DenseMatrix& out) {
    for (std::size_t k = 0; k < n; ++k) {
      rhs[k] = caputo_kernel(kernel, grid[k], grid[i], side, rule);
    }
    const auto w = lu_solve(F, rhs);
    std::copy(w.begin(), w.end(), out.row(i).begin());
    const auto check = matvec(Phi, w);
    for (std::size_t k = 0; k < n; ++k) {
      W.residual_inf = std::max(W.residual_inf, std::abs(check[k] - rhs[k]));
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    solve_row(left, i, W.A);
    solve_row(right, i, W.B);
  }
  return W;
}

std::vector<double> apply_weights(const DenseMatrix& W, std::span<const double> samples) {
  return matvec(W, samples);
}

}  // namespace fracdq
