#ifndef FRACDQ_APP_EXPR_HPP
#define FRACDQ_APP_EXPR_HPP

#include <memory>
#include <string>
#include <string_view>

#include "fracdq/error.hpp"

namespace fracdq::app {

/// Malformed expression text; the message carries the column.
class ExprParseError : public InvalidParameter {
 public:
  ExprParseError(const std::string& what, std::size_t column)
      : InvalidParameter(what), column_(column) {}
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// Evaluation hit a division by zero, gamma of a nonpositive argument, or
/// produced a non-finite value from finite inputs.
class ExprEvalError : public DomainError {
 public:
  using DomainError::DomainError;
};

/**
 * Arithmetic expression over the variables x and t.
 *
 * Grammar: numbers, x, t, pi, the operators + - * / ^ (right-associative,
 * binding tighter than unary minus), parentheses, and the functions
 * sin, cos, exp, abs, gamma (one argument) and pow (two arguments).
 * Copies share the parsed tree.
 */
class Expr {
 public:
  /// Throws ExprParseError.
  static Expr parse(std::string_view text);

  /// Throws ExprEvalError.
  double eval(double x, double t) const;

  bool uses_x() const noexcept { return uses_x_; }
  bool uses_t() const noexcept { return uses_t_; }
  const std::string& source() const noexcept { return source_; }

  struct Node;

 private:
  std::shared_ptr<const Node> root_;
  std::string source_;
  bool uses_x_ = false;
  bool uses_t_ = false;
};

}  // namespace fracdq::app

#endif  // FRACDQ_APP_EXPR_HPP
