#ifndef FRACDQ_QUADRATURE_HPP
#define FRACDQ_QUADRATURE_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace fracdq {

/// Point count used for the Caputo integrals unless overridden.
inline constexpr std::size_t kDefaultQuadraturePoints = 16;

/**
 * Gauss-Jacobi rule for the weight (1 - z)^lambda (1 + z)^mu on [-1, 1].
 *
 * Nodes are strictly increasing in (-1, 1) and all weights are positive.
 * The n-point rule integrates polynomials of degree <= 2n - 1 exactly
 * against the weight function. Instances are immutable.
 */
class JacobiRule {
 public:
  std::size_t size() const noexcept { return nodes_.size(); }
  double lambda() const noexcept { return lambda_; }
  double mu() const noexcept { return mu_; }
  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }

 private:
  friend JacobiRule jacobi_rule(std::size_t n, double lambda, double mu);

  JacobiRule(double lambda, double mu, std::vector<double> nodes,
             std::vector<double> weights)
      : lambda_(lambda), mu_(mu), nodes_(std::move(nodes)),
        weights_(std::move(weights)) {}

  double lambda_;
  double mu_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/**
 * Builds the n-point Gauss-Jacobi rule by the Golub-Welsch method: the
 * symmetric tridiagonal Jacobi matrix of the three-term recurrence is
 * diagonalized with implicit-shift QL, nodes are its eigenvalues and weights
 * are the squared first eigenvector components times the total mass.
 *
 * Throws InvalidParameter if n == 0, lambda <= -1 or mu <= -1.
 */
JacobiRule jacobi_rule(std::size_t n, double lambda, double mu);

/// Rule with lambda = 0 and mu = 1 - alpha, the Caputo kernel weight for order alpha.
JacobiRule caputo_rule(std::size_t n, double alpha);

/// Zeroth moment of the weight function, 2^(l+m+1) B(l+1, m+1).
double jacobi_mass(double lambda, double mu);

/// Sum of w_i f(z_i); approximates the weighted integral of f over [-1, 1].
double integrate_singular(const std::function<double(double)>& f,
                          const JacobiRule& rule);

/// Template overload that avoids std::function dispatch on hot paths.
template <typename F>
double integrate_singular_with(F&& f, const JacobiRule& rule) {
  const auto z = rule.nodes();
  const auto w = rule.weights();
  double sum = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) sum += w[i] * f(z[i]);
  return sum;
}

}  // namespace fracdq

#endif  // FRACDQ_QUADRATURE_HPP
