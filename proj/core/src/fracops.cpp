#include "fracdq/fracops.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "fracdq/error.hpp"

namespace fracdq {

CaputoSide::CaputoSide(Side side_, double alpha_, double a_, double b_)
    : side(side_), alpha(alpha_), a(a_), b(b_) {
  if (!(alpha > 1.0 && alpha <= 2.0)) {
    throw InvalidParameter("alpha must be in (1,2], got " + std::to_string(alpha));
  }
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw InvalidParameter("interval must satisfy a < b");
  }
}

double gamma_eval(double z) {
  static constexpr double kG = 7.0;
  static constexpr std::array<double, 9> kCoeff = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

  if (!(z > 0.0)) {
    throw DomainError("gamma_eval: argument must be > 0, got " + std::to_string(z));
  }
  if (z < 0.5) return gamma_eval(z + 1.0) / z;

  const double w = z - 1.0;
  double sum = kCoeff[0];
  for (std::size_t i = 1; i < kCoeff.size(); ++i) {
    sum += kCoeff[i] / (w + static_cast<double>(i));
  }
  const double t = w + kG + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, w + 0.5) * std::exp(-t) * sum;
}

namespace detail {

void check_caputo_args(const CaputoSide& side, double x, const JacobiRule* rule) {
  if (!std::isfinite(x) || x < side.a || x > side.b) {
    throw DomainError("Caputo evaluation point " + std::to_string(x) +
                      " outside [" + std::to_string(side.a) + ", " +
                      std::to_string(side.b) + "]");
  }
  if (rule != nullptr &&
      (rule->lambda() != 0.0 || std::abs(rule->mu() - (1.0 - side.alpha)) > 1e-12)) {
    throw InvalidParameter("quadrature rule does not match the Caputo weight (0, 1 - alpha)");
  }
}

}  // namespace detail

double caputo_kernel(const Kernel& kernel, double center, double x_i,
                     const CaputoSide& side, const JacobiRule& rule) {
  return caputo_quadrature(
      [&](double xi) { return kernel.eval_d2(xi, center); }, side, x_i, rule);
}

double caputo_power(double beta, double alpha, const CaputoSide& side, double x) {
  if (!(beta > 1.0)) {
    throw InvalidParameter("caputo_power: beta must be > 1, got " + std::to_string(beta));
  }
  detail::check_caputo_args(side, x, nullptr);
  const double dist = side.side == Side::Left ? x - side.a : side.b - x;
  return gamma_eval(beta + 1.0) / gamma_eval(beta - alpha + 1.0) *
         std::pow(dist, beta - alpha);
}

double caputo_oracle(const std::function<double(double)>& f_d2,
                     const CaputoSide& side, double x, double tol,
                     std::size_t max_panels) {
  if (!(tol > 0.0)) throw InvalidParameter("caputo_oracle: tol must be > 0");
  detail::check_caputo_args(side, x, nullptr);
  if (side.alpha == 2.0) return f_d2(x);

  const double dist = side.side == Side::Left ? x - side.a : side.b - x;
  if (dist == 0.0) return 0.0;

  // With s = dist to x and u = s^(2-alpha), s^(1-alpha) ds = du / (2-alpha).
  const double q = 2.0 - side.alpha;
  const double power = 1.0 / q;
  const double upper = std::pow(dist, q);
  const double sign = side.side == Side::Left ? -1.0 : 1.0;
  auto g = [&](double u) {
    const double s = u >= upper ? dist : std::pow(u, power);
    return f_d2(x + sign * s);
  };
  const double scale = 1.0 / (gamma_eval(q) * q);

  // Adaptive Simpson in u. Each panel gets a share of tol proportional to
  // its width and is split until the one- and two-panel estimates agree.
  struct Panel {
    double lo, hi, f_lo, f_mid, f_hi, whole, tol;
  };
  auto simpson = [](double lo, double hi, double f_lo, double f_mid, double f_hi) {
    return (hi - lo) / 6.0 * (f_lo + 4.0 * f_mid + f_hi);
  };
  constexpr std::size_t kInitialPanels = 64;
  const double raw_tol = tol / scale;
  std::vector<Panel> stack;
  stack.reserve(kInitialPanels + 64);
  for (std::size_t k = kInitialPanels; k-- > 0;) {
    const double lo = upper * static_cast<double>(k) / kInitialPanels;
    const double hi = k + 1 == kInitialPanels ? upper : upper * static_cast<double>(k + 1) / kInitialPanels;
    const double f_lo = g(lo), f_mid = g(0.5 * (lo + hi)), f_hi = g(hi);
    stack.push_back({lo, hi, f_lo, f_mid, f_hi, simpson(lo, hi, f_lo, f_mid, f_hi),
                     raw_tol * (hi - lo) / upper});
  }

  std::size_t panels = kInitialPanels;
  double total = 0.0;
  while (!stack.empty()) {
    const Panel p = stack.back();
    stack.pop_back();
    const double mid = 0.5 * (p.lo + p.hi);
    const double f_lm = g(0.5 * (p.lo + mid));
    const double f_rm = g(0.5 * (mid + p.hi));
    const double left = simpson(p.lo, mid, p.f_lo, f_lm, p.f_mid);
    const double right = simpson(mid, p.hi, p.f_mid, f_rm, p.f_hi);
    const double diff = left + right - p.whole;
    if (!std::isfinite(diff)) {
      throw NonConvergence("caputo_oracle: integrand is not finite");
    }
    if (std::abs(diff) <= 15.0 * p.tol || !(p.lo < mid && mid < p.hi)) {
      total += left + right + diff / 15.0;
      continue;
    }
    if (++panels > max_panels) {
      throw NonConvergence("caputo_oracle: tolerance not reached within " +
                           std::to_string(max_panels) + " panels");
    }
    stack.push_back({mid, p.hi, p.f_mid, f_rm, p.f_hi, right, 0.5 * p.tol});
    stack.push_back({p.lo, mid, p.f_lo, f_lm, p.f_mid, left, 0.5 * p.tol});
  }
  return scale * total;
}

}  // namespace fracdq
