#include "fracdq_app/commands.hpp"

#include <cmath>
#include <filesystem>
#include <ostream>

#include "CLI11.hpp"
#include "fracdq/bench.hpp"
#include "fracdq/dqweights.hpp"
#include "fracdq/fracops.hpp"
#include "fracdq/quadrature.hpp"
#include "fracdq/solver.hpp"
#include "fracdq_app/output.hpp"

namespace fracdq::app {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr double kConditionWarning = 1e12;

void note_condition(const RunConfig& cfg, std::ostream& log, double condition,
                    double residual) {
  if (cfg.verbosity == Verbosity::Verbose) {
    log << "interpolation matrix condition estimate " << format_real(condition)
        << ", weight residual " << format_real(residual) << '\n';
  }
  if (condition > kConditionWarning && cfg.verbosity != Verbosity::Quiet) {
    log << "warning: interpolation matrix condition estimate " << format_real(condition)
        << " exceeds " << format_real(kConditionWarning) << '\n';
  }
}

}  // namespace

void run_quadrature(const RunConfig& cfg, std::ostream& out) {
  const auto rule = caputo_rule(cfg.quadrature.n, cfg.quadrature.alpha);
  out << "node,weight\n";
  for (std::size_t i = 0; i < rule.size(); ++i) {
    out << format_real(rule.nodes()[i]) << ',' << format_real(rule.weights()[i]) << '\n';
  }
}

void run_weights(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  const auto& args = cfg.weights;
  const Family family = *parse_family(args.family);
  const Grid grid = chebyshev_grid(0.0, 1.0, args.M);
  const double eps = args.epsilon.value_or(default_shape(family, args.M, grid.length()));
  const Kernel kernel(family, eps);
  const auto rule = caputo_rule(cfg.quad_points, args.alpha);
  const WeightSet W = compute_weights(kernel, grid, args.alpha, rule);
  note_condition(cfg, log, W.condition, W.residual_inf);

  const fs::path dir(cfg.output_dir);
  emit_matrix_csv(dir / "A.csv", W.A);
  emit_matrix_csv(dir / "B.csv", W.B);
  emit_json(dir / "weights.json", {{"residual_inf", W.residual_inf},
                                   {"condition", W.condition},
                                   {"epsilon", eps},
                                   {"alpha", args.alpha},
                                   {"family", std::string(to_string(family))},
                                   {"M", args.M},
                                   {"quad_points", cfg.quad_points}});
  if (cfg.verbosity != Verbosity::Quiet) {
    out << "wrote " << (dir / "A.csv").string() << ", " << (dir / "B.csv").string()
        << ", " << (dir / "weights.json").string() << '\n';
  }
}

void run_solve(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  const SolveConfig sc = parse_config(read_text(cfg.solve.config_path));
  const Problem problem = to_problem(sc);
  const Grid grid = chebyshev_grid(sc.a, sc.b, sc.M);
  const double eps = sc.epsilon.value_or(default_shape(sc.family, sc.M, grid.length()));
  const Kernel kernel(sc.family, eps);
  const auto rule = caputo_rule(cfg.quad_points, sc.alpha);
  const WeightSet W = compute_weights(kernel, grid, sc.alpha, rule);
  note_condition(cfg, log, W.condition, W.residual_inf);

  const Solution sol =
      solve(problem, grid, W, sc.N, {.keep_history = !cfg.solve.streaming});
  if (cfg.verbosity != Verbosity::Quiet) {
    for (const auto& w : sol.warnings) log << "warning: " << w << '\n';
  }

  std::vector<CsvRow> rows;
  rows.reserve(sol.times.size() * grid.nodes().size());
  for (std::size_t n = 0; n < sol.times.size(); ++n) {
    for (std::size_t j = 0; j < grid.nodes().size(); ++j) {
      rows.push_back({format_real(sol.times[n]), format_real(grid[j]),
                      format_real(sol.values(n, j))});
    }
  }
  const fs::path dir(cfg.output_dir);
  emit_csv(dir / "solution.csv", {"t", "x", "value"}, rows);

  json summary = {{"condition", W.condition},
                  {"residual_inf", W.residual_inf},
                  {"lhs_condition", sol.lhs_condition},
                  {"epsilon", eps},
                  {"M", sc.M},
                  {"N", sc.N},
                  {"tau", sol.tau},
                  {"warnings", sol.warnings}};
  if (sc.exact) {
    const double t_end = sol.times.back();
    std::vector<double> ref(grid.nodes().size());
    for (std::size_t j = 0; j < ref.size(); ++j) ref[j] = sc.exact->eval(grid[j], t_end);
    summary["linf_error"] = bench::linf_error(sol.final_values(), ref);
  }
  emit_json(dir / "summary.json", summary);
  if (cfg.verbosity != Verbosity::Quiet) {
    out << "wrote " << (dir / "solution.csv").string() << ", "
        << (dir / "summary.json").string() << '\n';
    if (summary.contains("linf_error")) {
      out << "linf_error " << format_real(summary["linf_error"].get<double>()) << '\n';
    }
  }
}

bool run_bench(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  const auto example = static_cast<bench::Example>(cfg.bench.example);
  const Family family = *parse_family(cfg.bench.family);
  const auto m_list =
      cfg.bench.m_list.empty() ? bench::default_m_list(example) : cfg.bench.m_list;

  bench::BenchOptions options;
  options.quad_points = cfg.quad_points;
  const auto table = bench::convergence_table(example, family, m_list, options);

  const CsvRow header = {"example", "family", "M",          "N",        "tau",
                         "epsilon", "linf_error", "condition", "reference_linf",
                         "ratio_to_reference", "sam_linf", "status"};
  std::vector<CsvRow> rows;
  json jrows = json::array();
  bool ok = true;
  for (const auto& row : table.rows) {
    const auto reference = bench::reference_error(example, family, row.M);
    // NaN marks "no SAM value"; only Example 3 carries one.
    const double sam = example == bench::Example::Three
                           ? bench::sam_reference(row.M).value_or(std::nan(""))
                           : std::nan("");
    const std::string sam_cell = std::isnan(sam) ? "" : format_real(sam);
    auto opt = [](const std::optional<double>& v) { return v ? format_real(*v) : ""; };
    json jr = {{"M", row.M}};
    if (reference) jr["reference_linf"] = *reference;
    if (!std::isnan(sam)) jr["sam_linf"] = sam;

    if (!row.report) {
      ok = false;
      rows.push_back({std::to_string(cfg.bench.example), std::string(to_string(family)),
                      std::to_string(row.M), "", "", "", "", "", opt(reference), "", sam_cell,
                      "failed"});
      jr["failure"] = row.failure;
      if (cfg.verbosity != Verbosity::Quiet) {
        log << "M=" << row.M << " failed: " << row.failure << '\n';
      }
      jrows.push_back(jr);
      continue;
    }
    const auto& r = *row.report;
    std::string ratio_cell;
    jr["linf_error"] = r.linf_error;
    jr["condition"] = r.condition;
    jr["epsilon"] = r.epsilon;
    jr["N"] = r.N;
    jr["tau"] = r.tau;
    jr["wall_time_s"] = r.wall_time.count();
    if (reference) {
      const double ratio = r.linf_error / reference.value();
      ratio_cell = format_real(ratio);
      jr["ratio_to_reference"] = ratio;
      jr["within_factor_10"] = ratio <= 10.0 && ratio >= 0.1;
    }
    if (!std::isnan(sam)) jr["below_sam"] = r.linf_error < sam;
    rows.push_back({std::to_string(cfg.bench.example), std::string(to_string(family)),
                    std::to_string(r.M), std::to_string(r.N), format_real(r.tau),
                    format_real(r.epsilon), format_real(r.linf_error),
                    format_real(r.condition), opt(reference), ratio_cell, sam_cell, "ok"});
    if (row.ratio_to_previous) jr["ratio_to_previous"] = *row.ratio_to_previous;
    jrows.push_back(jr);
    if (cfg.verbosity == Verbosity::Verbose) {
      log << "M=" << r.M << " condition " << format_real(r.condition) << " time "
          << r.wall_time.count() << " s\n";
    }
  }

  const std::string stem = "bench_example" + std::to_string(cfg.bench.example) + "_" +
                           std::string(to_string(family));
  const fs::path dir(cfg.output_dir);
  emit_csv(dir / (stem + ".csv"), header, rows);
  emit_json(dir / (stem + ".json"), {{"example", cfg.bench.example},
                                     {"family", std::string(to_string(family))},
                                     {"monotone", table.monotone},
                                     {"rows", jrows}});
  if (cfg.verbosity != Verbosity::Quiet) {
    out << csv_line(header) << '\n';
    for (const auto& r : rows) out << csv_line(r) << '\n';
    out << "monotone: " << (table.monotone ? "yes" : "no") << '\n';
  }
  return ok;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg.quad_points = quad_points_from_env();
  } catch (const ConfigError& e) {
    err << e.what() << '\n';
    return kExitValidation;
  }

  CLI::App app{"Fractional differential quadrature with radial basis functions"};
  app.require_subcommand(1);
  app.fallthrough();
  bool quiet = false;
  bool verbose = false;
  app.add_option("--output", cfg.output_dir, "Output directory")->capture_default_str();
  app.add_flag("--quiet", quiet, "Suppress informational output");
  app.add_flag("--verbose", verbose, "Log condition numbers and residuals");

  auto* quad = app.add_subcommand("quadrature", "Print the Gauss-Jacobi rule for order alpha");
  cfg.quadrature.n = cfg.quad_points;
  quad->add_option("--n", cfg.quadrature.n, "Number of points")->capture_default_str();
  quad->add_option("--alpha", cfg.quadrature.alpha, "Fractional order in (1,2)")->required();

  auto* weights = app.add_subcommand("weights", "Compute left/right DQ weight matrices");
  weights->add_option("--family", cfg.weights.family, "mq, im or ga")->required();
  weights->add_option("--M", cfg.weights.M, "Number of grid intervals")->required();
  weights->add_option("--alpha", cfg.weights.alpha, "Fractional order in (1,2]")->required();
  weights->add_option("--epsilon", cfg.weights.epsilon, "Shape parameter");

  auto* solve_cmd = app.add_subcommand("solve", "Solve a problem described by a JSON file");
  solve_cmd->add_option("--config", cfg.solve.config_path, "JSON problem file")->required();
  solve_cmd->add_flag("--streaming", cfg.solve.streaming, "Keep only the final time level");

  auto* bench_cmd = app.add_subcommand("bench", "Run a reference convergence study");
  bench_cmd->add_option("--example", cfg.bench.example, "1, 2 or 3")->required();
  bench_cmd->add_option("--family", cfg.bench.family, "mq, im or ga")->required();
  bench_cmd->add_option("--M-list", cfg.bench.m_list, "Comma-separated M values")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitValidation;
  }

  cfg.verbosity = quiet ? Verbosity::Quiet : verbose ? Verbosity::Verbose : Verbosity::Normal;
  if (quad->parsed()) cfg.subcommand = Subcommand::Quadrature;
  if (weights->parsed()) cfg.subcommand = Subcommand::Weights;
  if (solve_cmd->parsed()) cfg.subcommand = Subcommand::Solve;
  if (bench_cmd->parsed()) cfg.subcommand = Subcommand::Bench;

  if (const auto problems = validate(cfg); !problems.empty()) {
    for (const auto& p : problems) err << "error: " << p << '\n';
    return kExitValidation;
  }

  try {
    switch (cfg.subcommand) {
      case Subcommand::Quadrature: run_quadrature(cfg, out); break;
      case Subcommand::Weights: run_weights(cfg, out, err); break;
      case Subcommand::Solve: run_solve(cfg, out, err); break;
      case Subcommand::Bench:
        if (!run_bench(cfg, out, err)) return kExitNumerical;
        break;
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const SingularMatrix& e) {
    err << "error: " << e.what() << " (condition estimate " << format_real(e.condition())
        << ")\n";
    return kExitNumerical;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace fracdq::app
