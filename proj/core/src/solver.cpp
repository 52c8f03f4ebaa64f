#include "fracdq/solver.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "fracdq/error.hpp"

namespace fracdq {
namespace {

constexpr double kCompatibilityTol = 1e-12;
constexpr int kBoundarySamples = 8;

bool finite_all(std::span<const double> v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

}  // namespace

void Problem::validate(const Grid& grid) const {
  std::ostringstream err;
  if (!(alpha > 1.0 && alpha <= 2.0)) err << "alpha must be in (1,2]; ";
  if (!(a < b)) err << "domain must satisfy a < b; ";
  if (!(T > 0.0) || !std::isfinite(T)) err << "T must be positive and finite; ";
  if (!kappa) err << "kappa is not set; ";
  if (!upsilon) err << "upsilon is not set; ";
  if (!forcing) err << "forcing is not set; ";
  if (!psi) err << "psi is not set; ";
  if (!g1) err << "g1 is not set; ";
  if (!g2) err << "g2 is not set; ";
  if (grid.a() != a || grid.b() != b) err << "grid endpoints differ from the domain; ";

  if (kappa && upsilon) {
    bool any_positive = false;
    for (double x : grid.nodes()) {
      const double k = kappa(x);
      const double u = upsilon(x);
      if (!(k >= 0.0) || !std::isfinite(k)) {
        err << "kappa must be nonnegative and finite (x=" << x << "); ";
        break;
      }
      if (!(u >= 0.0) || !std::isfinite(u)) {
        err << "upsilon must be nonnegative and finite (x=" << x << "); ";
        break;
      }
      any_positive = any_positive || k > 0.0 || u > 0.0;
    }
    if (!any_positive) err << "kappa and upsilon vanish together; ";
  }

  const std::string msg = err.str();
  if (!msg.empty()) throw InvalidParameter("invalid problem: " + msg.substr(0, msg.size() - 2));
}

std::vector<std::string> Problem::diagnostics(const Grid& grid) const {
  std::vector<std::string> out;
  bool kappa_zero = true;
  bool upsilon_zero = true;
  for (double x : grid.nodes()) {
    kappa_zero = kappa_zero && kappa(x) == 0.0;
    upsilon_zero = upsilon_zero && upsilon(x) == 0.0;
  }
  bool g1_nonzero = false;
  bool g2_nonzero = false;
  for (int k = 1; k <= kBoundarySamples; ++k) {
    const double t = T * k / kBoundarySamples;
    g1_nonzero = g1_nonzero || g1(t) != 0.0;
    g2_nonzero = g2_nonzero || g2(t) != 0.0;
  }
  if (g1_nonzero && !kappa_zero) {
    out.emplace_back("g1 is nonzero while kappa does not vanish identically");
  }
  if (g2_nonzero && !upsilon_zero) {
    out.emplace_back("g2 is nonzero while upsilon does not vanish identically");
  }
  if (std::abs(psi(a) - g1(0.0)) > kCompatibilityTol) {
    out.emplace_back("psi(a) differs from g1(0); proceeding with psi");
  }
  if (std::abs(psi(b) - g2(0.0)) > kCompatibilityTol) {
    out.emplace_back("psi(b) differs from g2(0); proceeding with psi");
  }
  return out;
}

CrankNicolsonSystem assemble_system(const Problem& problem, const Grid& grid,
                                    const WeightSet& W, double tau,
                                    AssembleOptions options) {
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw InvalidParameter("assemble_system: tau must be positive");
  }
  if (W.alpha != problem.alpha) {
    throw InvalidParameter("assemble_system: weight set alpha differs from problem alpha");
  }
  const std::size_t n = grid.nodes().size();
  if (W.A.rows() != n || W.A.cols() != n || W.B.rows() != n || W.B.cols() != n) {
    throw DimensionMismatch("assemble_system: weight matrices do not match the grid");
  }
  if (n < 3) throw InvalidParameter("assemble_system: grid needs an interior node");
  if (options.validate) problem.validate(grid);

  const std::size_t m = n - 2;
  CrankNicolsonSystem sys;
  sys.lhs = DenseMatrix::identity(m);
  sys.rhs_op = DenseMatrix::identity(m);
  sys.omega.resize(m);
  sys.omega_tilde.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double k = problem.kappa(grid[i + 1]);
    const double u = problem.upsilon(grid[i + 1]);
    for (std::size_t j = 0; j < m; ++j) {
      const double op = k * W.A(i + 1, j + 1) + u * W.B(i + 1, j + 1);
      sys.lhs(i, j) -= 0.5 * tau * op;
      sys.rhs_op(i, j) += 0.5 * tau * op;
    }
    sys.omega[i] = k * W.A(i + 1, 0) + u * W.B(i + 1, 0);
    sys.omega_tilde[i] = k * W.A(i + 1, n - 1) + u * W.B(i + 1, n - 1);
  }
  return sys;
}

std::vector<double> rhs_vector(const Problem& problem, const Grid& grid,
                               std::span<const double> omega,
                               std::span<const double> omega_tilde,
                               std::size_t n, double tau) {
  const std::size_t m = omega.size();
  if (omega_tilde.size() != m || grid.nodes().size() != m + 2) {
    throw DimensionMismatch("rhs_vector: boundary vectors do not match the grid");
  }
  if (n == 0) throw InvalidParameter("rhs_vector: step index starts at 1");
  const double t_now = static_cast<double>(n) * tau;
  const double t_prev = static_cast<double>(n - 1) * tau;
  const double t_half = t_now - 0.5 * tau;
  const double g_left = 0.5 * (problem.g1(t_now) + problem.g1(t_prev));
  const double g_right = 0.5 * (problem.g2(t_now) + problem.g2(t_prev));

  std::vector<double> H(m);
  for (std::size_t i = 0; i < m; ++i) {
    H[i] = problem.forcing(grid[i + 1], t_half) + g_left * omega[i] +
           g_right * omega_tilde[i];
  }
  return H;
}

Solution solve(const Problem& problem, const Grid& grid, const WeightSet& W,
               std::size_t N, SolveOptions options) {
  if (N == 0) throw InvalidParameter("solve: N must be >= 1");
  if (options.validate) problem.validate(grid);

  const double tau = problem.T / static_cast<double>(N);
  const auto sys = assemble_system(problem, grid, W, tau, {.validate = false});

  const std::size_t before = lu_factorization_count();
  const LUFactors F = lu_factor(sys.lhs);
  const double cond = condition_estimate(sys.lhs, F);
  if (F.singular()) {
    throw SingularMatrix("solve: Crank-Nicolson matrix is singular", cond);
  }

  const std::size_t n = grid.nodes().size();
  const std::size_t m = n - 2;
  Solution sol(grid);
  sol.steps = N;
  sol.tau = tau;
  sol.lhs_condition = cond;
  sol.warnings = problem.diagnostics(grid);
  sol.values = DenseMatrix(options.keep_history ? N + 1 : 1, n);

  std::vector<double> level(n);
  for (std::size_t j = 0; j < n; ++j) level[j] = problem.psi(grid[j]);
  std::vector<double> Y(level.begin() + 1, level.end() - 1);
  if (options.keep_history) {
    sol.times.push_back(0.0);
    std::copy(level.begin(), level.end(), sol.values.row(0).begin());
  }

  for (std::size_t step = 1; step <= N; ++step) {
    const auto H = rhs_vector(problem, grid, sys.omega, sys.omega_tilde, step, tau);
    auto rhs = matvec(sys.rhs_op, Y);
    for (std::size_t i = 0; i < m; ++i) rhs[i] += tau * H[i];
    Y = lu_solve(F, rhs);
    if (!finite_all(Y)) {
      throw NonFiniteSolution("solve: non-finite values at step " + std::to_string(step),
                              step);
    }
    const double t = static_cast<double>(step) * tau;
    level.front() = problem.g1(t);
    std::copy(Y.begin(), Y.end(), level.begin() + 1);
    level.back() = problem.g2(t);
    if (options.keep_history) {
      sol.times.push_back(t);
      std::copy(level.begin(), level.end(), sol.values.row(step).begin());
    }
  }
  if (!options.keep_history) {
    sol.times.push_back(static_cast<double>(N) * tau);
    std::copy(level.begin(), level.end(), sol.values.row(0).begin());
  }
  sol.lhs_factorizations = lu_factorization_count() - before;
  return sol;
}

}  // namespace fracdq
