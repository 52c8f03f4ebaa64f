#include "fracdq/kernels.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "fracdq/error.hpp"

namespace fracdq {

std::string_view to_string(Family family) noexcept {
  switch (family) {
    case Family::MQ: return "mq";
    case Family::IM: return "im";
    case Family::GA: return "ga";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) noexcept {
  std::string lower(name);
  for (auto& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (lower == "mq") return Family::MQ;
  if (lower == "im") return Family::IM;
  if (lower == "ga") return Family::GA;
  return std::nullopt;
}

Kernel::Kernel(Family family, double epsilon) : family_(family), epsilon_(epsilon) {
  if (!std::isfinite(epsilon) || !(epsilon > 0.0)) {
    throw InvalidParameter("kernel shape parameter must be finite and > 0, got " +
                           std::to_string(epsilon));
  }
}

double Kernel::eval(double x, double center) const noexcept {
  const double r2 = (x - center) * (x - center);
  const double e = epsilon_;
  switch (family_) {
    case Family::MQ: return std::sqrt(r2 + e * e);
    case Family::IM: return 1.0 / std::sqrt(r2 + e * e);
    case Family::GA: return std::exp(-e * r2);
  }
  return 0.0;
}

long double Kernel::eval_extended(long double x, long double center) const noexcept {
  const long double r2 = (x - center) * (x - center);
  const long double e = epsilon_;
  switch (family_) {
    case Family::MQ: return std::sqrt(r2 + e * e);
    case Family::IM: return 1.0L / std::sqrt(r2 + e * e);
    case Family::GA: return std::exp(-e * r2);
  }
  return 0.0L;
}

double Kernel::eval_d2(double x, double center) const noexcept {
  const double r2 = (x - center) * (x - center);
  const double e = epsilon_;
  switch (family_) {
    case Family::MQ: {
      const double q = r2 + e * e;
      return e * e / (q * std::sqrt(q));
    }
    case Family::IM: {
      const double q = r2 + e * e;
      return (2.0 * r2 - e * e) / (q * q * std::sqrt(q));
    }
    case Family::GA: return (4.0 * e * e * r2 - 2.0 * e) * std::exp(-e * r2);
  }
  return 0.0;
}

double default_shape(Family family, int M, double ell) {
  if (M < 1) throw InvalidParameter("default_shape: M must be >= 1");
  if (!(ell > 0.0)) throw InvalidParameter("default_shape: ell must be > 0");
  const double m1 = static_cast<double>(M) + 1.0;
  switch (family) {
    case Family::MQ: return 1.25 * ell / std::sqrt(m1);
    case Family::IM: return 2.0 / std::sqrt(m1);
    case Family::GA: return 1.05 * m1;
  }
  return 0.0;
}

}  // namespace fracdq
