#include "fracdq_app/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <vector>

#include "fracdq/fracops.hpp"

namespace fracdq::app {

struct Expr::Node {
  enum class Kind { Number, VarX, VarT, Neg, Add, Sub, Mul, Div, Pow, Call };
  enum class Fn { Sin, Cos, Exp, Abs, Gamma, Pow };

  Kind kind = Kind::Number;
  double value = 0.0;
  Fn fn = Fn::Sin;
  std::vector<std::shared_ptr<const Node>> args;
};

namespace {

using Node = Expr::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make(Node::Kind kind, std::vector<NodePtr> args = {}) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->args = std::move(args);
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse_all() {
    auto root = parse_sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return root;
  }

  bool uses_x = false;
  bool uses_t = false;

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ExprParseError("expression error at column " + std::to_string(pos_ + 1) +
                             ": " + msg + " in \"" + std::string(text_) + "\"",
                         pos_ + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  NodePtr parse_sum() {
    auto lhs = parse_product();
    for (;;) {
      if (accept('+')) {
        lhs = make(Node::Kind::Add, {lhs, parse_product()});
      } else if (accept('-')) {
        lhs = make(Node::Kind::Sub, {lhs, parse_product()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_product() {
    auto lhs = parse_unary();
    for (;;) {
      if (accept('*')) {
        lhs = make(Node::Kind::Mul, {lhs, parse_unary()});
      } else if (accept('/')) {
        lhs = make(Node::Kind::Div, {lhs, parse_unary()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_unary() {
    if (accept('-')) return make(Node::Kind::Neg, {parse_unary()});
    if (accept('+')) return parse_unary();
    return parse_power();
  }

  NodePtr parse_power() {
    auto base = parse_primary();
    if (accept('^')) return make(Node::Kind::Pow, {base, parse_unary()});
    return base;
  }

  NodePtr parse_primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (accept('(')) {
      auto inner = parse_sum();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  NodePtr parse_number() {
    const std::string rest(text_.substr(pos_));
    char* end = nullptr;
    const double v = std::strtod(rest.c_str(), &end);
    if (end == rest.c_str()) fail("malformed number");
    pos_ += static_cast<std::size_t>(end - rest.c_str());
    auto n = std::make_shared<Node>();
    n->value = v;
    return n;
  }

  NodePtr parse_identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string name(text_.substr(start, pos_ - start));
    if (name == "x") {
      uses_x = true;
      return make(Node::Kind::VarX);
    }
    if (name == "t") {
      uses_t = true;
      return make(Node::Kind::VarT);
    }
    if (name == "pi") {
      auto n = std::make_shared<Node>();
      n->value = std::numbers::pi;
      return n;
    }

    Node::Fn fn{};
    std::size_t arity = 1;
    if (name == "sin") {
      fn = Node::Fn::Sin;
    } else if (name == "cos") {
      fn = Node::Fn::Cos;
    } else if (name == "exp") {
      fn = Node::Fn::Exp;
    } else if (name == "abs") {
      fn = Node::Fn::Abs;
    } else if (name == "gamma") {
      fn = Node::Fn::Gamma;
    } else if (name == "pow") {
      fn = Node::Fn::Pow;
      arity = 2;
    } else {
      pos_ = start;
      fail("unknown identifier '" + name + "'");
    }

    expect('(');
    std::vector<NodePtr> args{parse_sum()};
    while (accept(',')) args.push_back(parse_sum());
    expect(')');
    if (args.size() != arity) {
      fail(name + " takes " + std::to_string(arity) + " argument(s)");
    }
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Call;
    n->fn = fn;
    n->args = std::move(args);
    return n;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

double checked(double v, const char* op) {
  if (!std::isfinite(v)) throw ExprEvalError(std::string("non-finite result from ") + op);
  return v;
}

double eval_node(const Node& n, double x, double t) {
  auto arg = [&](std::size_t i) { return eval_node(*n.args[i], x, t); };
  switch (n.kind) {
    case Node::Kind::Number: return n.value;
    case Node::Kind::VarX: return x;
    case Node::Kind::VarT: return t;
    case Node::Kind::Neg: return -arg(0);
    case Node::Kind::Add: return checked(arg(0) + arg(1), "+");
    case Node::Kind::Sub: return checked(arg(0) - arg(1), "-");
    case Node::Kind::Mul: return checked(arg(0) * arg(1), "*");
    case Node::Kind::Div: {
      const double den = arg(1);
      if (den == 0.0) throw ExprEvalError("division by zero");
      return checked(arg(0) / den, "/");
    }
    case Node::Kind::Pow: return checked(std::pow(arg(0), arg(1)), "^");
    case Node::Kind::Call:
      switch (n.fn) {
        case Node::Fn::Sin: return checked(std::sin(arg(0)), "sin");
        case Node::Fn::Cos: return checked(std::cos(arg(0)), "cos");
        case Node::Fn::Exp: return checked(std::exp(arg(0)), "exp");
        case Node::Fn::Abs: return std::abs(arg(0));
        case Node::Fn::Pow: return checked(std::pow(arg(0), arg(1)), "pow");
        case Node::Fn::Gamma: {
          const double z = arg(0);
          if (!(z > 0.0)) throw ExprEvalError("gamma of nonpositive argument");
          return checked(gamma_eval(z), "gamma");
        }
      }
  }
  throw ExprEvalError("corrupt expression tree");
}

}  // namespace

Expr Expr::parse(std::string_view text) {
  Parser parser(text);
  Expr e;
  e.root_ = parser.parse_all();
  e.source_ = std::string(text);
  e.uses_x_ = parser.uses_x;
  e.uses_t_ = parser.uses_t;
  return e;
}

double Expr::eval(double x, double t) const {
  if (!root_) throw ExprEvalError("empty expression");
  return eval_node(*root_, x, t);
}

}  // namespace fracdq::app
