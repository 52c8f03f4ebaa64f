#ifndef FRACDQ_SOLVER_HPP
#define FRACDQ_SOLVER_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "fracdq/densela.hpp"
#include "fracdq/dqweights.hpp"

namespace fracdq {

using SpaceFn = std::function<double(double)>;
using TimeFn = std::function<double(double)>;
using SpaceTimeFn = std::function<double(double, double)>;

/**
 * y_t - kappa(x) D+^alpha y - upsilon(x) D-^alpha y = f(x, t) on [a, b] x (0, T],
 * y(x, 0) = psi(x), y(a, t) = g1(t), y(b, t) = g2(t).
 */
struct Problem {
  double alpha = 1.5;
  SpaceFn kappa;
  SpaceFn upsilon;
  SpaceTimeFn forcing;
  SpaceFn psi;
  TimeFn g1;
  TimeFn g2;
  double a = 0.0;
  double b = 1.0;
  double T = 1.0;

  /**
   * Checks the scalar parameters and samples kappa and upsilon at the grid
   * nodes: both must be nonnegative and not both identically zero.
   * Throws InvalidParameter.
   */
  void validate(const Grid& grid) const;

  /// Non-fatal findings: boundary data violating the one-sided-coefficient
  /// restriction, and psi incompatible with g1(0) or g2(0).
  std::vector<std::string> diagnostics(const Grid& grid) const;
};

/// Crank-Nicolson operators restricted to the interior nodes 1..M-1.
struct CrankNicolsonSystem {
  DenseMatrix lhs;     ///< I - (tau/2)(K A + U B)
  DenseMatrix rhs_op;  ///< I + (tau/2)(K A + U B)
  std::vector<double> omega;        ///< kappa_i a_i0 + upsilon_i b_i0
  std::vector<double> omega_tilde;  ///< kappa_i a_iM + upsilon_i b_iM
};

struct AssembleOptions {
  /// Run Problem::validate before assembling.
  bool validate = true;
};

/// Throws InvalidParameter (tau <= 0, alpha mismatch), DimensionMismatch.
CrankNicolsonSystem assemble_system(const Problem& problem, const Grid& grid,
                                    const WeightSet& W, double tau,
                                    AssembleOptions options = {});

/**
 * Source vector for step n (1 <= n <= N):
 * H_i = f(x_i, t_n - tau/2) + (g1(t_n) + g1(t_{n-1}))/2 omega_i
 *                           + (g2(t_n) + g2(t_{n-1}))/2 omega_tilde_i.
 */
std::vector<double> rhs_vector(const Problem& problem, const Grid& grid,
                               std::span<const double> omega,
                               std::span<const double> omega_tilde,
                               std::size_t n, double tau);

struct SolveOptions {
  /// Retain every time level; otherwise only the final one is kept.
  bool keep_history = true;
  bool validate = true;
};

struct Solution {
  explicit Solution(Grid g) : grid(std::move(g)) {}

  Grid grid;
  /// Times of the stored levels: t_0..t_N, or just t_N when streaming.
  std::vector<double> times;
  /// One row per stored level, M + 1 columns.
  DenseMatrix values;
  std::size_t steps = 0;
  double tau = 0.0;
  /// Condition estimate of the Crank-Nicolson left-hand side.
  double lhs_condition = 0.0;
  std::size_t lhs_factorizations = 0;
  std::vector<std::string> warnings;

  std::span<const double> final_values() const {
    return values.row(values.rows() - 1);
  }
};

/**
 * Marches N Crank-Nicolson steps of size T/N. The left-hand side is factored
 * once. Boundary nodes are overwritten with g1, g2 at every level.
 *
 * Throws InvalidParameter (N == 0), SingularMatrix, NonFiniteSolution.
 */
Solution solve(const Problem& problem, const Grid& grid, const WeightSet& W,
               std::size_t N, SolveOptions options = {});

}  // namespace fracdq

#endif  // FRACDQ_SOLVER_HPP
