#ifndef FRACDQ_KERNELS_HPP
#define FRACDQ_KERNELS_HPP

#include <optional>
#include <string>
#include <string_view>

namespace fracdq {

/// Radial basis function families: multiquadric, inverse multiquadric, Gaussian.
enum class Family { MQ, IM, GA };

std::string_view to_string(Family family) noexcept;

/// Parses "mq", "im" or "ga" (case-insensitive).
std::optional<Family> parse_family(std::string_view name) noexcept;

/// An RBF family together with its shape parameter.
class Kernel {
 public:
  /// Throws InvalidParameter unless epsilon is finite and strictly positive.
  Kernel(Family family, double epsilon);

  Family family() const noexcept { return family_; }
  double epsilon() const noexcept { return epsilon_; }

  /// Kernel value at x for the given center.
  ///   MQ: sqrt(r^2 + e^2)   IM: 1 / sqrt(r^2 + e^2)   GA: exp(-e r^2)
  double eval(double x, double center) const noexcept;

  /// eval carried out in long double, for assembling interpolation matrices
  /// whose condition number exceeds 1 / DBL_EPSILON.
  long double eval_extended(long double x, long double center) const noexcept;

  /// Second derivative with respect to x.
  ///   MQ: e^2 (r^2 + e^2)^(-3/2)
  ///   IM: (2 r^2 - e^2) (r^2 + e^2)^(-5/2)
  ///   GA: (4 e^2 r^2 - 2 e) exp(-e r^2)
  double eval_d2(double x, double center) const noexcept;

 private:
  Family family_;
  double epsilon_;
};

/**
 * Default shape parameters scaled with the node count:
 * MQ 1.25 ell / sqrt(M + 1), IM 2 / sqrt(M + 1), GA 1.05 (M + 1).
 * ell is only used by MQ. Throws InvalidParameter if M < 1 or ell <= 0.
 */
double default_shape(Family family, int M, double ell);

}  // namespace fracdq

#endif  // FRACDQ_KERNELS_HPP
