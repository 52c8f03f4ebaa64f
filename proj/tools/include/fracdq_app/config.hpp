#ifndef FRACDQ_APP_CONFIG_HPP
#define FRACDQ_APP_CONFIG_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fracdq/error.hpp"
#include "fracdq/kernels.hpp"
#include "fracdq/solver.hpp"
#include "fracdq_app/expr.hpp"

namespace fracdq::app {

/// Rejected configuration. what() joins every problem found; errors() lists them.
class ConfigError : public InvalidParameter {
 public:
  explicit ConfigError(std::vector<std::string> errors);
  const std::vector<std::string>& errors() const noexcept { return errors_; }

 private:
  std::vector<std::string> errors_;
};

/// Problem description read by `solve --config`.
struct SolveConfig {
  double alpha = 0.0;
  Family family = Family::MQ;
  std::optional<double> epsilon;
  int M = 0;
  std::size_t N = 0;
  double T = 0.0;
  double a = 0.0;
  double b = 1.0;
  Expr kappa;
  Expr upsilon;
  Expr forcing;
  Expr psi;
  Expr g1;
  Expr g2;
  /// Optional exact solution y(x, t); enables linf_error in the summary.
  std::optional<Expr> exact;
};

/**
 * Parses and validates a JSON solve configuration:
 *   {alpha, family, epsilon?, M, N, T, domain: [a, b], kappa, upsilon,
 *    forcing, psi, g1, g2, exact?}
 * Expression fields are strings in the Expr grammar; kappa, upsilon and psi
 * may only use x, g1 and g2 only t.
 *
 * Throws ConfigError listing every problem, or a single parse error with
 * line and column for malformed JSON.
 */
SolveConfig parse_config(std::string_view text);

/// Coefficient functions backed by the config's expressions.
Problem to_problem(const SolveConfig& config);

enum class Subcommand { Quadrature, Weights, Solve, Bench };

enum class Verbosity { Quiet, Normal, Verbose };

struct QuadratureArgs {
  std::size_t n = 0;
  double alpha = 0.0;
};

struct WeightsArgs {
  std::string family;
  int M = 0;
  double alpha = 0.0;
  std::optional<double> epsilon;
};

struct SolveArgs {
  std::string config_path;
  bool streaming = false;
};

struct BenchArgs {
  int example = 0;
  std::string family;
  std::vector<int> m_list;  ///< empty selects the reference list
};

struct RunConfig {
  Subcommand subcommand = Subcommand::Quadrature;
  std::string output_dir = ".";
  Verbosity verbosity = Verbosity::Normal;
  std::size_t quad_points = 16;
  QuadratureArgs quadrature;
  WeightsArgs weights;
  SolveArgs solve;
  BenchArgs bench;
};

/// Checks the parameters of the selected subcommand against the library
/// preconditions; returns every violation (empty when valid).
std::vector<std::string> validate(const RunConfig& config);

/// Quadrature point count: FRACDQ_QUAD_POINTS if set and valid, else 16.
/// Throws ConfigError for a malformed value.
std::size_t quad_points_from_env();

}  // namespace fracdq::app

#endif  // FRACDQ_APP_CONFIG_HPP
