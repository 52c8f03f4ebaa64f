#include "fracdq/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "fracdq/error.hpp"

namespace fracdq {
namespace {

constexpr double kDeflationTol = 1e-14;
constexpr int kMaxSweeps = 200;

// Recurrence coefficients of the monic Jacobi polynomials for weight
// (1-z)^a (1+z)^b: diag[k] is alpha_k, off[k] is sqrt(beta_{k+1}).
void jacobi_recurrence(std::size_t n, double a, double b,
                       std::vector<double>& diag, std::vector<double>& off) {
  diag.assign(n, 0.0);
  off.assign(n, 0.0);
  const double ab = a + b;
  diag[0] = (b - a) / (ab + 2.0);
  for (std::size_t k = 1; k < n; ++k) {
    const double s = 2.0 * static_cast<double>(k) + ab;
    diag[k] = (b * b - a * a) / (s * (s + 2.0));
  }
  if (n > 1) {
    // k = 1 is written separately: the general form is 0/0 when a + b = -1.
    off[0] = std::sqrt(4.0 * (1.0 + a) * (1.0 + b) /
                       ((2.0 + ab) * (2.0 + ab) * (3.0 + ab)));
  }
  for (std::size_t k = 2; k < n; ++k) {
    const double kd = static_cast<double>(k);
    const double s = 2.0 * kd + ab;
    off[k - 1] = std::sqrt(4.0 * kd * (kd + a) * (kd + b) * (kd + ab) /
                           (s * s * (s + 1.0) * (s - 1.0)));
  }
}

// Implicit-shift QL on a symmetric tridiagonal matrix. On return d holds the
// eigenvalues and z the first component of each normalized eigenvector.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e,
                    std::vector<double>& z) {
  const std::size_t n = d.size();
  z.assign(n, 0.0);
  z[0] = 1.0;
  for (std::size_t l = 0; l < n; ++l) {
    int sweeps = 0;
    std::size_t m = l;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= kDeflationTol * dd) break;
      }
      if (m == l) break;
      if (sweeps++ == kMaxSweeps) {
        throw NonConvergence("jacobi_rule: tridiagonal QL did not converge");
      }
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      bool underflow = false;
      for (std::size_t i = m; i-- > l;) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        f = z[i + 1];
        z[i + 1] = s * z[i] + c * f;
        z[i] = c * z[i] - s * f;
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }
}

}  // namespace

double jacobi_mass(double lambda, double mu) {
  return std::exp((lambda + mu + 1.0) * std::log(2.0) + std::lgamma(lambda + 1.0) +
                  std::lgamma(mu + 1.0) - std::lgamma(lambda + mu + 2.0));
}

JacobiRule jacobi_rule(std::size_t n, double lambda, double mu) {
  if (n == 0) throw InvalidParameter("jacobi_rule: point count must be positive");
  if (!(lambda > -1.0) || !std::isfinite(lambda)) {
    throw InvalidParameter("jacobi_rule: lambda must be > -1, got " +
                           std::to_string(lambda));
  }
  if (!(mu > -1.0) || !std::isfinite(mu)) {
    throw InvalidParameter("jacobi_rule: mu must be > -1, got " + std::to_string(mu));
  }

  std::vector<double> d;
  std::vector<double> e;
  jacobi_recurrence(n, lambda, mu, d, e);
  std::vector<double> z;
  tridiagonal_ql(d, e, z);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return d[i] < d[j]; });

  const double mass = jacobi_mass(lambda, mu);
  std::vector<double> nodes(n);
  std::vector<double> weights(n);
  for (std::size_t k = 0; k < n; ++k) {
    nodes[k] = d[order[k]];
    weights[k] = mass * z[order[k]] * z[order[k]];
  }
  return JacobiRule(lambda, mu, std::move(nodes), std::move(weights));
}

JacobiRule caputo_rule(std::size_t n, double alpha) {
  if (!(alpha > 1.0 && alpha <= 2.0)) {
    throw InvalidParameter("caputo_rule: alpha must be in (1,2], got " +
                           std::to_string(alpha));
  }
  // The Caputo integral is bypassed at alpha = 2; hand back Gauss-Legendre.
  if (alpha == 2.0) return jacobi_rule(n, 0.0, 0.0);
  return jacobi_rule(n, 0.0, 1.0 - alpha);
}

double integrate_singular(const std::function<double(double)>& f,
                          const JacobiRule& rule) {
  return integrate_singular_with(f, rule);
}

}  // namespace fracdq
