#include "fracdq_app/config.hpp"

#include <cmath>
#include <cstdlib>
#include "json.hpp"

namespace fracdq::app {
namespace {

using nlohmann::json;

std::string join(const std::vector<std::string>& errors) {
  std::string out = "invalid configuration:";
  for (const auto& e : errors) out += "\n  - " + e;
  return out;
}

// Line and column (1-based) of a byte offset.
std::pair<std::size_t, std::size_t> locate(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

class FieldReader {
 public:
  FieldReader(const json& doc, std::vector<std::string>& errors)
      : doc_(doc), errors_(errors) {}

  std::optional<double> number(const char* key, bool required = true) {
    if (!doc_.contains(key)) {
      if (required) errors_.push_back(std::string("missing field '") + key + "'");
      return std::nullopt;
    }
    const auto& v = doc_.at(key);
    if (!v.is_number()) {
      errors_.push_back(std::string("field '") + key + "' must be a number");
      return std::nullopt;
    }
    const double d = v.get<double>();
    if (!std::isfinite(d)) {
      errors_.push_back(std::string("field '") + key + "' must be finite");
      return std::nullopt;
    }
    return d;
  }

  std::optional<long long> integer(const char* key) {
    if (!doc_.contains(key)) {
      errors_.push_back(std::string("missing field '") + key + "'");
      return std::nullopt;
    }
    const auto& v = doc_.at(key);
    if (!v.is_number_integer()) {
      errors_.push_back(std::string("field '") + key + "' must be an integer");
      return std::nullopt;
    }
    return v.get<long long>();
  }

  std::optional<Expr> expr(const char* key, bool allow_x, bool allow_t,
                           bool required = true) {
    if (!doc_.contains(key)) {
      if (required) errors_.push_back(std::string("missing field '") + key + "'");
      return std::nullopt;
    }
    const auto& v = doc_.at(key);
    std::string text;
    if (v.is_string()) {
      text = v.get<std::string>();
    } else if (v.is_number()) {
      text = v.dump();
    } else {
      errors_.push_back(std::string("field '") + key + "' must be an expression string");
      return std::nullopt;
    }
    try {
      Expr e = Expr::parse(text);
      if (e.uses_x() && !allow_x) {
        errors_.push_back(std::string("field '") + key + "' may not depend on x");
        return std::nullopt;
      }
      if (e.uses_t() && !allow_t) {
        errors_.push_back(std::string("field '") + key + "' may not depend on t");
        return std::nullopt;
      }
      return e;
    } catch (const ExprParseError& err) {
      errors_.push_back(std::string("field '") + key + "': " + err.what());
      return std::nullopt;
    }
  }

 private:
  const json& doc_;
  std::vector<std::string>& errors_;
};

}  // namespace

ConfigError::ConfigError(std::vector<std::string> errors)
    : InvalidParameter(join(errors)), errors_(std::move(errors)) {}

SolveConfig parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = locate(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ConfigError({"JSON parse error at line " + std::to_string(line) + ", column " +
                       std::to_string(col) + ": " + e.what()});
  }
  if (!doc.is_object()) throw ConfigError({"configuration must be a JSON object"});

  std::vector<std::string> errors;
  FieldReader read(doc, errors);
  SolveConfig cfg;

  if (auto alpha = read.number("alpha")) {
    cfg.alpha = *alpha;
    if (!(cfg.alpha > 1.0 && cfg.alpha <= 2.0)) errors.emplace_back("alpha must be in (1,2]");
  }
  if (!doc.contains("family")) {
    errors.emplace_back("missing field 'family'");
  } else if (!doc["family"].is_string() || !parse_family(doc["family"].get<std::string>())) {
    errors.emplace_back("family must be one of mq, im, ga");
  } else {
    cfg.family = *parse_family(doc["family"].get<std::string>());
  }
  if (auto eps = read.number("epsilon", false)) {
    if (!(*eps > 0.0)) errors.emplace_back("epsilon must be > 0");
    cfg.epsilon = eps;
  }
  if (auto M = read.integer("M")) {
    if (*M < 2 || *M > 100000) errors.emplace_back("M must be an integer >= 2");
    cfg.M = static_cast<int>(*M);
  }
  if (auto N = read.integer("N")) {
    if (*N < 1) errors.emplace_back("N must be an integer >= 1");
    cfg.N = static_cast<std::size_t>(std::max<long long>(*N, 0));
  }
  if (auto T = read.number("T")) {
    if (!(*T > 0.0)) errors.emplace_back("T must be > 0");
    cfg.T = *T;
  }
  if (!doc.contains("domain")) {
    errors.emplace_back("missing field 'domain'");
  } else {
    const auto& d = doc["domain"];
    if (!d.is_array() || d.size() != 2 || !d[0].is_number() || !d[1].is_number()) {
      errors.emplace_back("domain must be [a, b]");
    } else {
      cfg.a = d[0].get<double>();
      cfg.b = d[1].get<double>();
      if (!(cfg.a < cfg.b) || !std::isfinite(cfg.a) || !std::isfinite(cfg.b)) {
        errors.emplace_back("domain must satisfy a < b");
      }
    }
  }

  auto assign = [](Expr& dst, std::optional<Expr> src) {
    if (src) dst = std::move(*src);
  };
  assign(cfg.kappa, read.expr("kappa", true, false));
  assign(cfg.upsilon, read.expr("upsilon", true, false));
  assign(cfg.forcing, read.expr("forcing", true, true));
  assign(cfg.psi, read.expr("psi", true, false));
  assign(cfg.g1, read.expr("g1", false, true));
  assign(cfg.g2, read.expr("g2", false, true));
  cfg.exact = read.expr("exact", true, true, false);

  if (!errors.empty()) throw ConfigError(std::move(errors));
  return cfg;
}

Problem to_problem(const SolveConfig& c) {
  Problem p;
  p.alpha = c.alpha;
  p.a = c.a;
  p.b = c.b;
  p.T = c.T;
  p.kappa = [e = c.kappa](double x) { return e.eval(x, 0.0); };
  p.upsilon = [e = c.upsilon](double x) { return e.eval(x, 0.0); };
  p.forcing = [e = c.forcing](double x, double t) { return e.eval(x, t); };
  p.psi = [e = c.psi](double x) { return e.eval(x, 0.0); };
  p.g1 = [e = c.g1](double t) { return e.eval(0.0, t); };
  p.g2 = [e = c.g2](double t) { return e.eval(0.0, t); };
  return p;
}

std::vector<std::string> validate(const RunConfig& c) {
  std::vector<std::string> errors;
  if (c.quad_points < 1) errors.emplace_back("quadrature point count must be >= 1");
  switch (c.subcommand) {
    case Subcommand::Quadrature:
      if (c.quadrature.n < 1) errors.emplace_back("--n must be >= 1");
      if (!(c.quadrature.alpha > 1.0 && c.quadrature.alpha < 2.0)) {
        errors.emplace_back("--alpha must be in (1,2) for a Gauss-Jacobi rule");
      }
      break;
    case Subcommand::Weights:
      if (!parse_family(c.weights.family)) errors.emplace_back("--family must be mq, im or ga");
      if (c.weights.M < 2) errors.emplace_back("--M must be >= 2");
      if (!(c.weights.alpha > 1.0 && c.weights.alpha <= 2.0)) {
        errors.emplace_back("--alpha must be in (1,2]");
      }
      if (c.weights.epsilon && !(*c.weights.epsilon > 0.0)) {
        errors.emplace_back("--epsilon must be > 0");
      }
      break;
    case Subcommand::Solve:
      if (c.solve.config_path.empty()) errors.emplace_back("--config is required");
      break;
    case Subcommand::Bench:
      if (c.bench.example < 1 || c.bench.example > 3) {
        errors.emplace_back("--example must be 1, 2 or 3");
      }
      if (!parse_family(c.bench.family)) errors.emplace_back("--family must be mq, im or ga");
      for (int M : c.bench.m_list) {
        if (M < 2) {
          errors.emplace_back("--M-list entries must be >= 2");
          break;
        }
      }
      break;
  }
  return errors;
}

std::size_t quad_points_from_env() {
  const char* raw = std::getenv("FRACDQ_QUAD_POINTS");
  if (raw == nullptr || *raw == '\0') return kDefaultQuadraturePoints;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 1 || v > 1000) {
    throw ConfigError({std::string("FRACDQ_QUAD_POINTS must be an integer in [1, 1000], got '") +
                       raw + "'"});
  }
  return static_cast<std::size_t>(v);
}

}  // namespace fracdq::app
