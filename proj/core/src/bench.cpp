#include "fracdq/bench.hpp"

#include <cmath>
#include <map>
#include <string>
#include <tuple>

#include "fracdq/dqweights.hpp"
#include "fracdq/error.hpp"
#include "fracdq/fracops.hpp"

namespace fracdq::bench {
namespace {

using Clock = std::chrono::steady_clock;

constexpr double kExample2Horizon = 0.5;
constexpr double kExample2Tau = 2.0e-4;
constexpr double kExample3Horizon = 1.0;

// Reference l-infinity errors, keyed by (example, family, M).
const std::map<std::tuple<int, Family, int>, double>& reference_errors() {
  static const std::map<std::tuple<int, Family, int>, double> table = {
      {{1, Family::MQ, 5}, 6.4167e-02},  {{1, Family::IM, 5}, 5.7172e-02},
      {{1, Family::GA, 5}, 1.9069e-01},  {{1, Family::MQ, 10}, 6.3543e-03},
      {{1, Family::IM, 10}, 8.5795e-03}, {{1, Family::GA, 10}, 2.2488e-02},
      {{1, Family::MQ, 15}, 1.3676e-03}, {{1, Family::IM, 15}, 7.2670e-04},
      {{1, Family::GA, 15}, 8.5354e-04}, {{1, Family::MQ, 20}, 4.2484e-04},
      {{1, Family::IM, 20}, 4.0834e-04}, {{1, Family::GA, 20}, 1.1827e-04},
      {{1, Family::MQ, 25}, 2.2093e-04}, {{1, Family::IM, 25}, 8.2798e-05},
      {{1, Family::GA, 25}, 4.6350e-06},

      {{2, Family::MQ, 5}, 2.2567e-04},  {{2, Family::IM, 5}, 2.0463e-04},
      {{2, Family::GA, 5}, 2.2607e-04},  {{2, Family::MQ, 10}, 1.5291e-05},
      {{2, Family::IM, 10}, 1.2391e-05}, {{2, Family::GA, 10}, 7.3949e-06},
      {{2, Family::MQ, 20}, 4.1822e-07}, {{2, Family::IM, 20}, 1.9394e-07},
      {{2, Family::GA, 20}, 1.4895e-08}, {{2, Family::MQ, 25}, 7.6704e-08},
      {{2, Family::IM, 25}, 2.9039e-08}, {{2, Family::GA, 25}, 2.0757e-09},

      {{3, Family::MQ, 15}, 1.5903e-04}, {{3, Family::IM, 15}, 1.4862e-04},
      {{3, Family::GA, 15}, 1.4127e-04}, {{3, Family::MQ, 20}, 7.9355e-05},
      {{3, Family::IM, 20}, 7.5052e-05}, {{3, Family::GA, 20}, 7.2001e-05},
      {{3, Family::MQ, 25}, 4.6347e-05}, {{3, Family::IM, 25}, 4.5794e-05},
      {{3, Family::GA, 25}, 4.5247e-05}, {{3, Family::MQ, 30}, 2.9290e-05},
      {{3, Family::IM, 30}, 3.0308e-05}, {{3, Family::GA, 30}, 3.1650e-05},
  };
  return table;
}

double shape_for(Family family, const Grid& grid, const BenchOptions& options) {
  return options.epsilon ? *options.epsilon
                         : default_shape(family, grid.M(), grid.length());
}

ErrorReport run_pde(Example example, const Problem& problem,
                    double (*exact)(double, double), Family family, int M,
                    std::size_t N, const BenchOptions& options) {
  const auto start = Clock::now();
  const Grid grid = chebyshev_grid(problem.a, problem.b, M);
  const Kernel kernel(family, shape_for(family, grid, options));
  const auto rule = caputo_rule(options.quad_points, problem.alpha);
  const WeightSet W = compute_weights(kernel, grid, problem.alpha, rule);
  const Solution sol = solve(problem, grid, W, N, {.keep_history = false});

  const double t_end = sol.times.back();
  std::vector<double> ref(grid.nodes().size());
  for (std::size_t j = 0; j < ref.size(); ++j) ref[j] = exact(grid[j], t_end);

  ErrorReport rep;
  rep.example = example;
  rep.family = family;
  rep.M = M;
  rep.N = N;
  rep.tau = sol.tau;
  rep.epsilon = kernel.epsilon();
  rep.linf_error = linf_error(sol.final_values(), ref);
  rep.condition = W.condition;
  rep.wall_time = Clock::now() - start;
  return rep;
}

}  // namespace

double linf_error(std::span<const double> approx, std::span<const double> exact) {
  if (approx.size() != exact.size()) {
    throw DimensionMismatch("linf_error: lengths " + std::to_string(approx.size()) +
                            " and " + std::to_string(exact.size()) + " differ");
  }
  double err = 0.0;
  for (std::size_t i = 0; i < approx.size(); ++i) {
    err = std::max(err, std::abs(approx[i] - exact[i]));
  }
  return err;
}

std::vector<double> example1_reference(const Grid& grid, double alpha, double tol) {
  const CaputoSide left(Side::Left, alpha, grid.a(), grid.b());
  std::vector<double> ref(grid.nodes().size());
  for (std::size_t j = 0; j < ref.size(); ++j) {
    ref[j] = caputo_oracle([](double s) { return -std::sin(s); }, left, grid[j], tol);
  }
  return ref;
}

double example1_closed_form(double x, double alpha, int terms) {
  const double z = -0.25 * x * x;
  const double c1 = 0.5 * (4.0 - alpha);
  const double c2 = 0.5 * (5.0 - alpha);
  double term = 1.0;
  double sum = 1.0;
  for (int j = 0; j + 1 < terms; ++j) {
    term *= z / ((c1 + j) * (c2 + j));
    sum += term;
  }
  return -std::pow(x, 3.0 - alpha) * sum / gamma_eval(4.0 - alpha);
}

ErrorReport run_example_1(Family family, int M, const BenchOptions& options) {
  constexpr double kAlpha = 1.1;
  const auto start = Clock::now();
  const Grid grid = chebyshev_grid(0.0, 1.0, M);
  const Kernel kernel(family, shape_for(family, grid, options));
  const auto rule = caputo_rule(options.quad_points, kAlpha);
  const WeightSet W = compute_weights(kernel, grid, kAlpha, rule);

  std::vector<double> samples(grid.nodes().size());
  for (std::size_t j = 0; j < samples.size(); ++j) samples[j] = std::sin(grid[j]);
  const auto approx = apply_weights(W.A, samples);
  const auto ref = example1_reference(grid, kAlpha, options.oracle_tol);

  ErrorReport rep;
  rep.example = Example::One;
  rep.family = family;
  rep.M = M;
  rep.epsilon = kernel.epsilon();
  rep.linf_error = linf_error(approx, ref);
  rep.condition = W.condition;
  rep.wall_time = Clock::now() - start;
  return rep;
}

Problem example2_problem(double alpha) {
  Problem p;
  p.alpha = alpha;
  p.a = 0.0;
  p.b = 1.0;
  p.T = kExample2Horizon;
  p.kappa = [](double) { return 1.0; };
  p.upsilon = [](double) { return 1.0; };
  // x^2 (1-x)^2 = x^2 - 2x^3 + x^4 = (1-x)^2 - 2(1-x)^3 + (1-x)^4, so both
  // one-sided derivatives follow from the power rule.
  p.forcing = [alpha](double x, double t) {
    const CaputoSide left(Side::Left, alpha, 0.0, 1.0);
    const CaputoSide right(Side::Right, alpha, 0.0, 1.0);
    auto expand = [&](const CaputoSide& side) {
      return caputo_power(2.0, alpha, side, x) - 2.0 * caputo_power(3.0, alpha, side, x) +
             caputo_power(4.0, alpha, side, x);
    };
    const double shape = x * x * (1.0 - x) * (1.0 - x);
    return 3.0 * t * t * shape - t * t * t * (expand(left) + expand(right));
  };
  p.psi = [](double) { return 0.0; };
  p.g1 = [](double) { return 0.0; };
  p.g2 = [](double) { return 0.0; };
  return p;
}

double example2_exact(double x, double t) {
  return t * t * t * x * x * (1.0 - x) * (1.0 - x);
}

ErrorReport run_example_2(Family family, int M, double tau, double alpha,
                          const BenchOptions& options) {
  if (!(tau > 0.0)) throw InvalidParameter("run_example_2: tau must be > 0");
  const Problem problem = example2_problem(alpha);
  const auto N = static_cast<std::size_t>(std::llround(problem.T / tau));
  if (N == 0) throw InvalidParameter("run_example_2: tau exceeds the horizon");
  return run_pde(Example::Two, problem, &example2_exact, family, M, N, options);
}

Problem example3_problem(double alpha) {
  Problem p;
  p.alpha = alpha;
  p.a = 0.0;
  p.b = 1.0;
  p.T = kExample3Horizon;
  const double scale = gamma_eval(5.0 - alpha) / 24.0;
  p.kappa = [alpha, scale](double x) { return std::pow(x, alpha) * scale; };
  p.upsilon = [](double) { return 0.0; };
  p.forcing = [](double x, double t) { return -2.0 * std::exp(-t) * x * x * x * x; };
  p.psi = [](double x) { return x * x * x * x; };
  p.g1 = [](double) { return 0.0; };
  p.g2 = [](double t) { return std::exp(-t); };
  return p;
}

double example3_exact(double x, double t) { return std::exp(-t) * x * x * x * x; }

ErrorReport run_example_3(Family family, int M, double alpha, const BenchOptions& options) {
  if (M < 2) throw InvalidParameter("run_example_3: M must be >= 2");
  const Problem problem = example3_problem(alpha);
  // tau = 1/M on the unit horizon.
  return run_pde(Example::Three, problem, &example3_exact, family, M,
                 static_cast<std::size_t>(M), options);
}

ErrorReport run_example(Example example, Family family, int M,
                        const BenchOptions& options) {
  switch (example) {
    case Example::One: return run_example_1(family, M, options);
    case Example::Two: return run_example_2(family, M, kExample2Tau, 1.8, options);
    case Example::Three: return run_example_3(family, M, 1.5, options);
  }
  throw InvalidParameter("unknown example");
}

std::vector<int> default_m_list(Example example) {
  switch (example) {
    case Example::One: return {5, 10, 15, 20, 25};
    case Example::Two: return {5, 10, 20, 25};
    case Example::Three: return {15, 20, 25, 30};
  }
  return {};
}

std::optional<double> reference_error(Example example, Family family, int M) {
  const auto& table = reference_errors();
  const auto it = table.find({static_cast<int>(example), family, M});
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::optional<double> sam_reference(int M) {
  switch (M) {
    case 15: return 7.660e-04;
    case 20: return 4.493e-04;
    case 25: return 2.929e-04;
    case 30: return 2.067e-04;
    default: return std::nullopt;
  }
}

ConvergenceTable convergence_table(Example example, Family family,
                                   std::span<const int> m_list,
                                   const BenchOptions& options) {
  if (m_list.empty()) throw InvalidParameter("convergence_table: M list is empty");
  ConvergenceTable table;
  table.example = example;
  table.family = family;
  std::optional<double> previous;
  for (int M : m_list) {
    TableRow row;
    row.M = M;
    try {
      row.report = run_example(example, family, M, options);
      const double err = row.report->linf_error;
      if (previous) {
        row.ratio_to_previous = err / *previous;
        if (err > kMonotoneSlack * *previous) table.monotone = false;
      }
      previous = err;
    } catch (const Error& e) {
      row.failure = e.what();
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace fracdq::bench
