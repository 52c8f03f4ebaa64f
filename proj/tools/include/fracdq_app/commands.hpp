#ifndef FRACDQ_APP_COMMANDS_HPP
#define FRACDQ_APP_COMMANDS_HPP

#include <iosfwd>

#include "fracdq_app/config.hpp"

namespace fracdq::app {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitIo = 4;

/// Prints the Gauss-Jacobi rule for (0, 1 - alpha) as `node,weight` CSV.
void run_quadrature(const RunConfig& config, std::ostream& out);

/// Writes A.csv, B.csv and weights.json into the output directory.
void run_weights(const RunConfig& config, std::ostream& out, std::ostream& log);

/// Writes solution.csv (t,x,value) and summary.json into the output directory.
void run_solve(const RunConfig& config, std::ostream& out, std::ostream& log);

/// Writes bench_example<k>_<family>.csv and .json; returns false if any row failed.
bool run_bench(const RunConfig& config, std::ostream& out, std::ostream& log);

/// Full command line: argument parsing, dispatch, and the exit-code mapping
/// 0 ok, 2 validation, 3 numerical failure, 4 I/O.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fracdq::app

#endif  // FRACDQ_APP_COMMANDS_HPP
