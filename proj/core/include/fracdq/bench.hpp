#ifndef FRACDQ_BENCH_HPP
#define FRACDQ_BENCH_HPP

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fracdq/kernels.hpp"
#include "fracdq/quadrature.hpp"
#include "fracdq/solver.hpp"

namespace fracdq::bench {

/// Reference test cases:
///   1  left Caputo derivative of sin(x) on [0, 1], alpha = 1.1
///   2  two-sided problem with y = t^3 x^2 (1 - x)^2, alpha = 1.8, t = 0.5
///   3  left-sided problem with y = exp(-t) x^4, alpha = 1.5, t = 1, tau = 1/M
enum class Example { One = 1, Two = 2, Three = 3 };

struct ErrorReport {
  Example example = Example::One;
  Family family = Family::MQ;
  int M = 0;
  std::size_t N = 0;  ///< 0 for Example 1 (no time stepping)
  double tau = 0.0;
  double epsilon = 0.0;
  double linf_error = 0.0;
  double condition = 0.0;
  std::chrono::duration<double> wall_time{};
};

struct BenchOptions {
  std::size_t quad_points = kDefaultQuadraturePoints;
  /// Tolerance of the brute-force reference for Example 1.
  double oracle_tol = 1e-10;
  /// Shape parameter override; the scaled defaults are used when empty.
  std::optional<double> epsilon;
};

/// max_i |approx_i - exact_i|. Throws DimensionMismatch.
double linf_error(std::span<const double> approx, std::span<const double> exact);

/// Brute-force left Caputo derivative of sin at each node, order alpha.
std::vector<double> example1_reference(const Grid& grid, double alpha, double tol);

/// -x^(3-alpha) 1F2(1; (4-alpha)/2, (5-alpha)/2; -x^2/4) / Gamma(4-alpha),
/// the closed form of the left Caputo derivative of sin on [0, x], with the
/// hypergeometric series truncated after `terms` terms.
double example1_closed_form(double x, double alpha, int terms = 30);

ErrorReport run_example_1(Family family, int M, const BenchOptions& options = {});

Problem example2_problem(double alpha = 1.8);
double example2_exact(double x, double t);

ErrorReport run_example_2(Family family, int M, double tau, double alpha = 1.8,
                          const BenchOptions& options = {});

Problem example3_problem(double alpha = 1.5);
double example3_exact(double x, double t);

ErrorReport run_example_3(Family family, int M, double alpha = 1.5,
                          const BenchOptions& options = {});

/// Dispatches with the reference time step for the example.
ErrorReport run_example(Example example, Family family, int M,
                        const BenchOptions& options = {});

/// M sequence of the reference study for the example.
std::vector<int> default_m_list(Example example);

/// Reference DQ error for (example, family, M), if tabulated.
std::optional<double> reference_error(Example example, Family family, int M);

/// Reference spline-approximation (SAM) error for Example 3, comparison only.
std::optional<double> sam_reference(int M);

struct TableRow {
  int M = 0;
  std::optional<ErrorReport> report;
  std::string failure;  ///< set when the row failed
  /// Error relative to the previous successful row (empty for the first).
  std::optional<double> ratio_to_previous;
};

struct ConvergenceTable {
  Example example = Example::One;
  Family family = Family::MQ;
  std::vector<TableRow> rows;
  /// True when no successful row exceeds its predecessor by more than 20%.
  bool monotone = true;
};

/// One row per M. A failing row is recorded rather than aborting the table.
/// Throws InvalidParameter for an empty list.
ConvergenceTable convergence_table(Example example, Family family,
                                   std::span<const int> m_list,
                                   const BenchOptions& options = {});

/// Allowed relative rise between successive table rows.
inline constexpr double kMonotoneSlack = 1.2;

}  // namespace fracdq::bench

#endif  // FRACDQ_BENCH_HPP
