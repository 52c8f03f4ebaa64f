#include "properties.hpp"

#include "golden.hpp"

#include <fracdq/fracdq.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

namespace fracdq::checks {
namespace {

std::string fmt(const char* format, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, format, a, b);
  return buf;
}

CheckResult finish(std::string name, double worst, double limit, std::string detail) {
  return {std::move(name), worst <= limit, worst, limit, std::move(detail)};
}

constexpr Family kFamilies[] = {Family::MQ, Family::IM, Family::GA};

// int_{-1}^{1} (1 + z)^mu z^k dz by the stable forward recurrence
// J_k = (2^(mu+1) - k J_{k-1}) / (mu + 1 + k), obtained by integrating
// d/ds [s^(mu+1) (s-1)^k] over s = 1 + z in [0, 2].
std::vector<double> jacobi_moments(double mu, int kmax) {
  std::vector<double> J(static_cast<std::size_t>(kmax) + 1);
  const double top = std::pow(2.0, mu + 1.0);
  J[0] = top / (mu + 1.0);
  for (int k = 1; k <= kmax; ++k) {
    J[k] = (top - k * J[k - 1]) / (mu + 1.0 + k);
  }
  return J;
}

WeightSet default_weights(Family family, const Grid& grid, double alpha) {
  const Kernel kernel(family, default_shape(family, grid.M(), grid.length()));
  return compute_weights(kernel, grid, alpha, caputo_rule(kDefaultQuadraturePoints, alpha));
}

// Chebyshev nodes on [-1, 1] with x_{M-i} = -x_i bit for bit, so the grid
// is exactly invariant under reflection.
Grid mirrored_grid(int M) {
  std::vector<double> x(static_cast<std::size_t>(M) + 1);
  for (int i = 0; 2 * i < M; ++i) {
    x[i] = -std::cos(i * std::numbers::pi / M);
    x[M - i] = -x[i];
  }
  if (M % 2 == 0) x[M / 2] = 0.0;
  x.front() = -1.0;
  x.back() = 1.0;
  return Grid(std::move(x));
}

Problem uniform_problem(double alpha, double value) {
  Problem p;
  p.alpha = alpha;
  p.kappa = [](double) { return 1.0; };
  p.upsilon = [](double) { return 1.0; };
  p.forcing = [](double, double) { return 0.0; };
  p.psi = [value](double) { return value; };
  p.g1 = [value](double) { return value; };
  p.g2 = [value](double) { return value; };
  p.T = 1.0;
  return p;
}

DenseMatrix random_matrix(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  DenseMatrix A(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) A(i, j) = u(rng);
  }
  return A;
}

}  // namespace

CheckResult check_golden_rule() {
  const JacobiRule rule = jacobi_rule(16, 0.0, -0.5);
  double worst = 0.0;
  for (std::size_t i = 0; i < 16; ++i) {
    worst = std::max(worst, std::abs(rule.nodes()[i] - kJacobi16Nodes[i]));
    worst = std::max(worst, std::abs(rule.weights()[i] - kJacobi16Weights[i]));
  }
  return finish("golden 16-point rule", worst, kGoldenTol,
                fmt("max abs deviation %.3e over 32 values", worst));
}

CheckResult check_quadrature_moments() {
  double worst = 0.0;
  for (double mu : {-0.9, -0.5, -0.1, 0.0}) {
    for (std::size_t n = 1; n <= 20; ++n) {
      const JacobiRule rule = jacobi_rule(n, 0.0, mu);
      const int kmax = static_cast<int>(2 * n - 1);
      const std::vector<double> J = jacobi_moments(mu, kmax);
      for (int k = 0; k <= kmax; ++k) {
        double q = 0.0;
        double scale = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          const double term = rule.weights()[i] * std::pow(rule.nodes()[i], k);
          q += term;
          scale += std::abs(term);
        }
        // Odd moments vanish for mu = 0, so the error is measured against
        // the larger of |J_k| and the absolute mass of the sum.
        worst = std::max(worst, std::abs(q - J[k]) / std::max(std::abs(J[k]), scale));
      }
    }
  }
  return finish("quadrature moment exactness", worst, kMomentTol,
                fmt("max relative moment error %.3e (n<=20, k<=2n-1)", worst));
}

CheckResult check_kernel_finite_difference(int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_real_distribution<double> eps_dist(0.1, 30.0);
  std::uniform_real_distribution<double> r_dist(0.0, 2.0);
  std::uniform_real_distribution<double> c_dist(-1.0, 1.0);
  double worst = 0.0;
  double worst_rel = 0.0;
  for (int s = 0; s < samples; ++s) {
    const Family family = kFamilies[pick(rng)];
    const double eps = eps_dist(rng);
    const double center = c_dist(rng);
    const double x = center + r_dist(rng);
    const Kernel kernel(family, eps);
    // Step scaled to the length over which the kernel varies: 1/sqrt(eps)
    // for GA, sqrt(r^2 + eps^2) for MQ and IM. That keeps both truncation and
    // long double rounding far below the tolerance across the whole range.
    const long double r = x - center;
    const long double e = eps;
    const long double length = family == Family::GA ? 1.0L / std::sqrt(e) : std::sqrt(r * r + e * e);
    const long double h = 1e-5L * length;
    const long double xl = x;
    const long double fd = (kernel.eval_extended(xl + h, center) - 2.0L * kernel.eval_extended(xl, center) +
                            kernel.eval_extended(xl - h, center)) /
                           (h * h);
    const double ref = static_cast<double>(fd);
    const double err = std::abs(kernel.eval_d2(x, center) - ref);
    worst = std::max(worst, err / (kKernelFdTol * std::abs(ref) + kKernelFdFloor));
    if (std::abs(ref) > kKernelFdFloor) worst_rel = std::max(worst_rel, err / std::abs(ref));
  }
  return finish("kernel second derivative vs finite difference", worst, 1.0,
                fmt("worst error / (1e-6 |ref| + 1e-10) = %.3f, max relative %.3e", worst, worst_rel));
}

CheckResult check_power_rule_oracle() {
  // Two orders below the comparison tolerance; the trapezoid converges only
  // like h^2.1 for beta = 3, alpha = 1.1, so much tighter exhausts the budget.
  constexpr double kOracleTol = 1e-11;
  double worst = 0.0;
  for (double beta : {2.0, 3.0, 4.0}) {
    for (double alpha : {1.1, 1.5, 1.9}) {
      const CaputoSide left(Side::Left, alpha, 0.0, 1.0);
      const CaputoSide right(Side::Right, alpha, 0.0, 1.0);
      const auto left_d2 = [beta](double s) { return beta * (beta - 1.0) * std::pow(s, beta - 2.0); };
      const auto right_d2 = [beta](double s) {
        return beta * (beta - 1.0) * std::pow(1.0 - s, beta - 2.0);
      };
      for (double x : {0.25, 0.6, 1.0}) {
        worst = std::max(worst, std::abs(caputo_oracle(left_d2, left, x, kOracleTol) -
                                         caputo_power(beta, alpha, left, x)));
        const double xr = 1.0 - x;
        worst = std::max(worst, std::abs(caputo_oracle(right_d2, right, xr, kOracleTol) -
                                         caputo_power(beta, alpha, right, xr)));
      }
    }
  }
  return finish("Caputo power rule vs oracle", worst, kPowerRuleTol,
                fmt("max abs deviation %.3e (beta 2,3,4; alpha 1.1,1.5,1.9; both sides)", worst));
}

CheckResult check_classical_limit(Family family) {
  const Grid grid = chebyshev_grid(0.0, 1.0, 25);
  std::vector<double> s(grid.nodes().size());
  for (std::size_t j = 0; j < s.size(); ++j) s[j] = std::sin(grid[j]);
  const WeightSet W = default_weights(family, grid, 2.0);
  const std::vector<double> d2 = apply_weights(W.A, s);
  double worst = 0.0;
  double interior = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double err = std::abs(d2[i] + s[i]);
    worst = std::max(worst, err);
    if (i != 0 && i + 1 != s.size()) interior = std::max(interior, err);
  }
  return finish("alpha = 2 limit on sin, M = 25, " + std::string(to_string(family)), worst,
                kClassicalLimitTol,
                fmt("max |A sin + sin| %.3e over all nodes, %.3e interior", worst, interior));
}

CheckResult check_endpoint_rows() {
  std::size_t nonzero = 0;
  std::size_t checked = 0;
  for (Family family : kFamilies) {
    for (int M : {5, 10, 20}) {
      const Grid grid = chebyshev_grid(0.0, 1.0, M);
      for (double alpha : {1.1, 1.5, 1.9}) {
        const WeightSet W = default_weights(family, grid, alpha);
        for (std::size_t j = 0; j <= static_cast<std::size_t>(M); ++j) {
          nonzero += W.A(0, j) != 0.0;
          nonzero += W.B(M, j) != 0.0;
          checked += 2;
        }
      }
    }
  }
  return finish("endpoint rows exactly zero", static_cast<double>(nonzero), 0.0,
                std::to_string(nonzero) + " nonzero of " + std::to_string(checked) + " entries");
}

CheckResult check_mirror_symmetry() {
  double worst = 0.0;
  for (Family family : kFamilies) {
    for (int M : {6, 9, 14}) {
      const Grid grid = mirrored_grid(M);
      for (double alpha : {1.3, 1.7}) {
        const WeightSet W = default_weights(family, grid, alpha);
        for (int i = 0; i <= M; ++i) {
          for (int j = 0; j <= M; ++j) {
            worst = std::max(worst, std::abs(W.B(i, j) - W.A(M - i, M - j)));
          }
        }
      }
    }
  }
  return finish("left/right mirror symmetry", worst, kMirrorTol,
                fmt("max |B(i,j) - A(M-i,M-j)| = %.3e", worst));
}

CheckResult check_zero_problem() {
  const Grid grid = chebyshev_grid(0.0, 1.0, 10);
  const WeightSet W = default_weights(Family::MQ, grid, 1.5);
  const Solution sol = solve(uniform_problem(1.5, 0.0), grid, W, 50);
  std::size_t nonzero = 0;
  for (double v : sol.values.data()) nonzero += v != 0.0;
  return finish("zero problem stays exactly zero", static_cast<double>(nonzero), 0.0,
                std::to_string(nonzero) + " nonzero of " + std::to_string(sol.values.data().size()) +
                    " stored values");
}

CheckResult check_constant_problem() {
  const Grid grid = chebyshev_grid(0.0, 1.0, 10);
  const WeightSet W = default_weights(Family::MQ, grid, 1.5);
  const Problem problem = uniform_problem(1.5, 1.0);
  // The Caputo derivative of a constant is zero; the weights only annihilate
  // constants up to this measured residual.
  const int M = grid.M();
  double annihilation = 0.0;
  for (int i = 1; i < M; ++i) {
    double row = 0.0;
    for (int j = 0; j <= M; ++j) row += W.A(i, j) + W.B(i, j);
    annihilation = std::max(annihilation, std::abs(row));
  }
  const Solution sol = solve(problem, grid, W, 100);
  double deviation = 0.0;
  for (double v : sol.values.data()) deviation = std::max(deviation, std::abs(v - 1.0));
  const double limit = annihilation * problem.T;
  return finish("constant problem deviation bounded", deviation, limit,
                fmt("max deviation %.3e, annihilation residual x T %.3e", deviation, limit));
}

CheckResult check_lu_reconstruction(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (std::size_t n : {1, 2, 5, 17, 50, 120, 200}) {
    const DenseMatrix A = random_matrix(n, rng);
    const LUFactors F = lu_factor(A);
    const DenseMatrix LU = matmul(F.lower(), F.upper());
    DenseMatrix diff(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) diff(i, j) = A(F.perm()[i], j) - LU(i, j);
    }
    worst = std::max(worst, diff.norm_inf() / A.norm_inf());
  }
  return finish("LU reconstruction PA = LU", worst, kLuReconstructionTol,
                fmt("max ||PA - LU|| / ||A|| = %.3e (n up to 200)", worst));
}

CheckResult check_manufactured_solution(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst = 0.0;
  for (std::size_t n : {3, 30, 100}) {
    // B^T B + n I is symmetric positive definite and well conditioned.
    const DenseMatrix B = random_matrix(n, rng);
    DenseMatrix A(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k) s += B(k, i) * B(k, j);
        A(i, j) = s + (i == j ? static_cast<double>(n) : 0.0);
      }
    }
    std::vector<double> x(n);
    for (double& v : x) v = u(rng);
    const std::vector<double> rhs = matvec(A, x);
    const std::vector<double> got = lu_solve(lu_factor(A), rhs);
    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i) err = std::max(err, std::abs(got[i] - x[i]));
    worst = std::max(worst, err / norm_inf(x));
  }
  return finish("manufactured solution recovery", worst, kManufacturedTol,
                fmt("max relative error %.3e (SPD, n up to 100)", worst));
}

std::vector<CheckResult> run_property_suite() {
  return {
      check_quadrature_moments(),  check_kernel_finite_difference(), check_power_rule_oracle(),
      check_classical_limit(Family::MQ), check_classical_limit(Family::IM),
      check_classical_limit(Family::GA), check_endpoint_rows(),            check_mirror_symmetry(),
      check_zero_problem(),        check_constant_problem(),         check_lu_reconstruction(),
      check_manufactured_solution(),
  };
}

}  // namespace fracdq::checks
