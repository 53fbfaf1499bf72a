// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: exact power-integral ratios, catalog transforms,
// Bernoulli/Euler tables, and the verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 computational non-convergence.

#include "wallis/number_sequences.hpp"
#include "wallis/quadrature.hpp"
#include "wallis/rational.hpp"
#include "wallis/series_catalog.hpp"
#include "wallis/transform.hpp"
#include "wallis/verification.hpp"
#include "wallis/wallis_table.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <numbers>
#include <string>

namespace {

struct CliConfig {
  double tolerance = 1e-10;
  std::size_t max_terms = 1'000'000;
  std::string output_format = "table";
  int quadrature_level_cap = 12;
};

wallis::EngineOptions engine_options(const CliConfig& cfg) {
  wallis::EngineOptions opts;
  opts.max_terms = cfg.max_terms;
  return opts;
}

int cmd_wallis(const CliConfig& cfg, std::size_t n, const std::string& parity) {
  const bool odd = parity == "odd";
  const wallis::BigRational ratio =
      odd ? wallis::wallis_odd_ratio(n) : wallis::wallis_even_ratio(n);
  const double value =
      odd ? wallis::to_double(ratio) : wallis::to_double(ratio) * std::numbers::pi / 2.0;
  if (cfg.output_format == "json") {
    nlohmann::json j{{"n", n},
                     {"parity", parity},
                     {"ratio", wallis::ratio_string(ratio)},
                     {"times_pi_over_2", !odd},
                     {"value", value}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << wallis::ratio_string(ratio) << (odd ? "" : " × π/2") << "\n";
    std::cout << "≈ " << wallis::decimal_string(value) << "\n";
  }
  return 0;
}

int cmd_integrate(const CliConfig& cfg, const std::string& name) {
  const wallis::SeriesSpec& spec = wallis::catalog_lookup(name);
  const auto opts = engine_options(cfg);

  wallis::PiLinearValue series;
  bool converged = true;
  std::string engine_note;
  try {
    series = spec.parity() == wallis::Parity::even
                 ? wallis::integrate_even(wallis::stream_of(spec), cfg.tolerance, opts)
                 : wallis::integrate_odd(wallis::stream_of(spec), cfg.tolerance, opts);
  } catch (const wallis::NonConvergenceError& e) {
    series = e.best;
    converged = false;
    engine_note = e.what();
  }

  const wallis::QuadratureResult oracle = wallis::oracle_integral(
      name, wallis::InnerFunction::sin, std::min(cfg.tolerance, 1e-10),
      cfg.quadrature_level_cap);
  const double diff = std::abs(series.rendered() - oracle.value);

  std::string constant_note;
  for (const auto& app : wallis::application_cases())
    if (app.series_name == name && app.known_constant)
      constant_note = app.known_constant->label + " = " +
                      wallis::decimal_string(app.known_constant->value);

  if (cfg.output_format == "json") {
    nlohmann::json j{{"name", name},
                     {"series_value", series.rendered()},
                     {"series_tail", series.tail_bound},
                     {"terms", series.terms_used},
                     {"strategy", series.strategy_used},
                     {"oracle_value", oracle.value},
                     {"oracle_error", oracle.error_estimate},
                     {"evaluations", oracle.evaluations},
                     {"abs_diff", diff},
                     {"converged", converged}};
    if (!constant_note.empty()) j["note"] = constant_note;
    if (!engine_note.empty()) j["engine_error"] = engine_note;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "series  " << wallis::decimal_string(series.rendered()) << "  (tail bound "
              << wallis::decimal_string(series.tail_bound, 3) << ", " << series.terms_used
              << " terms, strategy " << series.strategy_used << ")\n";
    std::cout << "oracle  " << wallis::decimal_string(oracle.value) << "  (error estimate "
              << wallis::decimal_string(oracle.error_estimate, 3) << ", " << oracle.evaluations
              << " evaluations)\n";
    std::cout << "diff    " << wallis::decimal_string(diff, 3) << "\n";
    if (!constant_note.empty()) std::cout << "note    " << constant_note << "\n";
    if (!engine_note.empty()) std::cout << "note    did not converge: " << engine_note << "\n";
  }
  return converged ? 0 : 3;
}

int cmd_numbers(const CliConfig& cfg, const std::string& kind, std::size_t count) {
  const bool bernoulli = kind == "bernoulli";
  if (cfg.output_format == "json") {
    nlohmann::json values = nlohmann::json::array();
    for (std::size_t k = 1; k <= count; ++k)
      values.push_back({{"k", k},
                        {"value", bernoulli ? wallis::ratio_string(wallis::bernoulli_positive(k))
                                            : wallis::euler_positive(k).str()}});
    nlohmann::json j{{"kind", kind}, {"values", std::move(values)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "k\tvalue\n";
    for (std::size_t k = 1; k <= count; ++k)
      std::cout << k << "\t"
                << (bernoulli ? wallis::ratio_string(wallis::bernoulli_positive(k))
                              : wallis::euler_positive(k).str())
                << "\n";
  }
  return 0;
}

int cmd_verify(const CliConfig& cfg) {
  wallis::VerifyOptions opts;
  opts.engine = engine_options(cfg);
  opts.level_cap = cfg.quadrature_level_cap;
  const wallis::VerificationReport report = wallis::run_all(cfg.tolerance, opts);
  if (cfg.output_format == "json")
    std::cout << wallis::report_json(report) << "\n";
  else
    std::cout << wallis::report_table(report);
  return report.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integrals of f(sin x) over [0, pi/2] from Maclaurin coefficients"};
  app.require_subcommand(1);

  CliConfig cfg;
  const char* env_config = std::getenv("WALLIS_CONFIG");
  app.set_config("--config", env_config ? env_config : "",
                 "Configuration file (flat key=value)");
  app.add_option("--tol,--tolerance", cfg.tolerance, "Certified tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-terms,--max_terms", cfg.max_terms, "Series term budget")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format,--output_format", cfg.output_format, "Output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();
  app.add_option("--level-cap,--quadrature_level_cap", cfg.quadrature_level_cap,
                 "Quadrature level cap")
      ->check(CLI::Range(1, 14))
      ->capture_default_str();

  auto* wallis_cmd = app.add_subcommand("wallis", "Exact value of a power integral");
  std::size_t n = 0;
  std::string parity = "odd";
  wallis_cmd->add_option("--n", n, "Power index")->required()->check(CLI::NonNegativeNumber);
  wallis_cmd->add_option("--parity", parity, "odd: sin^(2n+1); even: sin^(2n)")
      ->check(CLI::IsMember({"odd", "even"}));
  wallis_cmd->fallthrough();

  auto* integrate_cmd =
      app.add_subcommand("integrate", "Transform a catalog series and compare with quadrature");
  std::string name;
  integrate_cmd->add_option("--name", name, "Catalog identifier")->required();
  integrate_cmd->fallthrough();

  auto* numbers_cmd = app.add_subcommand("numbers", "Bernoulli/Euler number tables");
  std::string kind;
  std::size_t count = 0;
  numbers_cmd->add_option("kind", kind, "bernoulli or euler")
      ->required()
      ->check(CLI::IsMember({"bernoulli", "euler"}));
  numbers_cmd->add_option("--count", count, "How many values")
      ->required()
      ->check(CLI::PositiveNumber);
  numbers_cmd->fallthrough();

  auto* verify_cmd = app.add_subcommand("verify", "Run the full verification suite");
  verify_cmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (wallis_cmd->parsed()) return cmd_wallis(cfg, n, parity);
    if (integrate_cmd->parsed()) return cmd_integrate(cfg, name);
    if (numbers_cmd->parsed()) return cmd_numbers(cfg, kind, count);
    if (verify_cmd->parsed()) return cmd_verify(cfg);
  } catch (const wallis::UnknownSeriesError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const wallis::NonConvergenceError& e) {
    std::cerr << "did not converge: " << e.what() << "\n";
    std::cerr << "partial value " << wallis::decimal_string(e.best.rendered()) << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 2;
}
