#ifndef FRACDQ_FRACOPS_HPP
#define FRACDQ_FRACOPS_HPP

#include <cstddef>
#include <cmath>
#include <functional>

#include "fracdq/kernels.hpp"
#include "fracdq/quadrature.hpp"

namespace fracdq {

enum class Side { Left, Right };

/**
 * Which Caputo derivative to take: the left one integrates from a up to x,
 * the right one from x up to b. Order alpha lies in (1, 2], so the
 * integrand is always the second derivative.
 */
struct CaputoSide {
  /// Throws InvalidParameter unless 1 < alpha <= 2 and a < b.
  CaputoSide(Side side, double alpha, double a, double b);

  Side side;
  double alpha;
  double a;
  double b;
};

/// Gamma function for z > 0 (Lanczos, g = 7, nine terms). Throws DomainError for z <= 0.
double gamma_eval(double z);

/**
 * Caputo derivative of order alpha, at x, of a function whose second
 * derivative is d2, evaluated with a Gauss-Jacobi rule (lambda = 0,
 * mu = 1 - alpha) after mapping [a, x] (or [x, b]) onto [-1, 1].
 *
 * Returns exactly 0 at the singular endpoint (x == a for Left, x == b for
 * Right). At alpha == 2 the rule is ignored and d2(x) is returned.
 */
template <typename D2>
double caputo_quadrature(D2&& d2, const CaputoSide& side, double x,
                         const JacobiRule& rule);

/// Caputo derivative of one RBF (centered at `center`) at node x_i.
/// Throws DomainError if x_i is outside [a, b].
double caputo_kernel(const Kernel& kernel, double center, double x_i,
                     const CaputoSide& side, const JacobiRule& rule);

/**
 * Power rule: Left gives Gamma(b+1)/Gamma(b-alpha+1) (x-a)^(b-alpha), Right
 * the same in (b-x). Throws InvalidParameter if beta <= 1.
 */
double caputo_power(double beta, double alpha, const CaputoSide& side, double x);

/**
 * Reference Caputo derivative by brute force. The substitution
 * u = dist^(2 - alpha) removes the weak singularity, after which adaptive
 * Simpson subdivision refines each panel until its one- and two-panel
 * estimates agree; the panels' shares of tol sum to tol.
 *
 * Throws NonConvergence if max_panels is exceeded, DomainError if x is
 * outside [a, b].
 */
double caputo_oracle(const std::function<double(double)>& f_d2,
                     const CaputoSide& side, double x, double tol,
                     std::size_t max_panels = std::size_t{1} << 20);

// ---------------------------------------------------------------------------

namespace detail {
void check_caputo_args(const CaputoSide& side, double x, const JacobiRule* rule);
}

template <typename D2>
double caputo_quadrature(D2&& d2, const CaputoSide& side, double x,
                         const JacobiRule& rule) {
  detail::check_caputo_args(side, x, side.alpha < 2.0 ? &rule : nullptr);
  if (side.alpha == 2.0) return d2(x);

  const double half = (side.side == Side::Left ? x - side.a : side.b - x) / 2.0;
  if (half == 0.0) return 0.0;

  double sum = 0.0;
  if (side.side == Side::Left) {
    sum = integrate_singular_with(
        [&](double z) { return d2(x - half * (1.0 + z)); }, rule);
  } else {
    sum = integrate_singular_with(
        [&](double z) { return d2(x + half * (1.0 + z)); }, rule);
  }
  return std::pow(half, 2.0 - side.alpha) / gamma_eval(2.0 - side.alpha) * sum;
}

}  // namespace fracdq

#endif  // FRACDQ_FRACOPS_HPP
