// djc — damped atom-mode dynamics tables.
//
// Subcommands:
//   list       print the scenario catalog
//   run        run a catalog scenario or a JSON config file
//   sweep      phase sweep over theta, theta1, or theta2
//   selfcheck  run the invariant suite, one pass/fail line per property
//
// Exit status: 0 success, 1 validation error (message names the offending
// field), 2 numerical failure (message names the scenario and the time the
// integrator reached).

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "djc/config.hpp"
#include "djc/model.hpp"
#include "djc/ode.hpp"
#include "djc/scenarios.hpp"
#include "djc/selfcheck.hpp"
#include "djc/table.hpp"
#include "djc/time_grid.hpp"

namespace {

struct OutputOptions {
  std::optional<std::string> format;
  std::optional<std::string> out_path;
  std::optional<double> tol;
  std::optional<int> grid_points;
  std::optional<double> t_end;
};

// Registers the shared flags on a subcommand, binding them to `opts`.
void add_output_flags(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--format", "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->each([&opts](const std::string& v) { opts.format = v; });
  cmd->add_option("--out", "Output path ('-' = standard output)")
      ->each([&opts](const std::string& v) { opts.out_path = v; });
  cmd->add_option("--tol", "Integrator tolerance")
      ->check(CLI::PositiveNumber)
      ->each([&opts](const std::string& v) { opts.tol = std::stod(v); });
  cmd->add_option("--grid-points", "Number of grid points")
      ->check(CLI::TypeValidator<int>())
      ->each([&opts](const std::string& v) { opts.grid_points = std::stoi(v); });
  cmd->add_option("--t-end", "End of the time window, units of inverse coupling")
      ->check(CLI::Number)
      ->each([&opts](const std::string& v) { opts.t_end = std::stod(v); });
}

void apply_overrides(djc::Scenario& s, const OutputOptions& opts) {
  if (opts.tol) s.tol = *opts.tol;
  if (opts.grid_points || opts.t_end) {
    const double t_end = opts.t_end ? *opts.t_end : s.grid.t_end();
    const int n_points = opts.grid_points ? *opts.grid_points : s.grid.n_points();
    s.grid = djc::TimeGrid(s.grid.t_start(), t_end, n_points);
  }
}

int emit(const djc::TimeSeriesTable& table, const std::string& format,
         const std::string& out_path) {
  std::ostringstream body;
  if (format == "json") {
    djc::write_json(table, body);
  } else {
    djc::write_csv(table, body);
  }
  if (out_path == "-" || out_path.empty()) {
    std::cout << body.str();
    return 0;
  }
  std::ofstream file(out_path, std::ios::binary);
  file << body.str();
  file.close();
  if (!file) {
    std::cerr << "error: out: cannot write '" << out_path << "'\n";
    return 1;
  }
  return 0;
}

int run_command(const std::string& target, const OutputOptions& opts) {
  djc::Scenario scenario{};
  std::string format = "csv";
  std::string out_path = "-";

  if (auto from_catalog = djc::find_scenario(target)) {
    scenario = std::move(*from_catalog);
  } else if (std::filesystem::exists(target)) {
    std::ifstream file(target, std::ios::binary);
    std::ostringstream text;
    text << file.rdbuf();
    if (!file) {
      std::cerr << "error: cannot read config file '" << target << "'\n";
      return 1;
    }
    const djc::RunConfig config = djc::parse_run_config(text.str());
    scenario = djc::scenario_from_config(config, std::filesystem::path(target).stem().string());
    format = config.format;
    out_path = config.out_path;
  } else {
    std::cerr << "error: unknown scenario or config file '" << target << "'\n";
    return 1;
  }

  apply_overrides(scenario, opts);
  const djc::TimeSeriesTable table = djc::run_scenario(scenario);
  return emit(table, opts.format.value_or(format), opts.out_path.value_or(out_path));
}

// Base states for the sweeps: the equal-amplitude correlated state in the
// damped regime for the one-atom phase, and the three-amplitude two-atom
// state (weights 1/2, 1/10, 4/10) for theta1/theta2.
djc::Scenario make_sweep(const std::string& phase, const std::vector<std::string>& tokens) {
  djc::Scenario s;
  s.name = "sweep_" + phase;
  s.grid = djc::TimeGrid(0.0, 15.0, 1501);
  const djc::ModelParams params = djc::ModelParams::resonant(1.0, 6.0);

  std::vector<double> angles;
  angles.reserve(tokens.size());
  for (const std::string& token : tokens) {
    try {
      angles.push_back(djc::parse_angle_token(token));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(std::string("--values: ") + e.what());
    }
  }

  if (phase == "theta") {
    s.model = djc::ModelKind::one_atom;
    s.title = "Rescaled excited population vs relative phase, c1 = c2 = sqrt(1/2), "
              "Gamma/Omega = 6";
    s.observables = {"ptilde_corr"};
    const double amp = std::sqrt(0.5);
    for (size_t i = 0; i < tokens.size(); ++i) {
      s.runs.push_back(djc::ScenarioRun{
          "theta_" + tokens[i], params,
          djc::OneAtomRun{djc::CorrelatedInit(amp, amp, angles[i]), std::nullopt}});
    }
  } else {
    s.model = djc::ModelKind::two_atom;
    s.title = "Two-atom concurrence vs " + phase +
              ", amplitudes sqrt(1/2), sqrt(1/10), sqrt(4/10), Gamma/Omega = 6";
    s.observables = {"concurrence", "concurrence_steady"};
    const double a1 = std::sqrt(0.5), a2 = std::sqrt(0.1), a3 = std::sqrt(0.4);
    for (size_t i = 0; i < tokens.size(); ++i) {
      const double theta1 = phase == "theta1" ? angles[i] : 0.0;
      const double theta2 = phase == "theta2" ? angles[i] : 0.0;
      s.runs.push_back(djc::ScenarioRun{
          phase + "_" + tokens[i], params,
          djc::TwoAtomRun{djc::TwoAtomInit(a1, a2, a3, theta1, theta2)}});
    }
  }
  return s;
}

int list_command() {
  for (const djc::Scenario& s : djc::catalog()) {
    std::printf("%-8s %s\n", s.name.c_str(), s.title.c_str());
  }
  return 0;
}

int selfcheck_command() {
  const std::vector<djc::CheckResult> results = djc::run_selfcheck();
  int failed = 0;
  for (const djc::CheckResult& r : results) {
    if (!r.passed) ++failed;
    std::printf("[%s] %s — %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                r.detail.c_str());
  }
  std::printf("selfcheck: %zu/%zu properties passed\n", results.size() - failed,
              results.size());
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Damped atom-mode dynamics: excitation transfer, information flow, "
               "and two-atom entanglement tables"};
  app.require_subcommand(1);

  app.add_subcommand("list", "Print the scenario catalog");

  OutputOptions run_opts;
  std::string run_target;
  CLI::App* run_cmd = app.add_subcommand("run", "Run a catalog scenario or a config file");
  run_cmd->add_option("target", run_target, "Scenario name or JSON config file path")
      ->required();
  add_output_flags(run_cmd, run_opts);

  OutputOptions sweep_opts;
  std::string sweep_phase;
  std::vector<std::string> sweep_values;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Run a phase sweep");
  sweep_cmd->add_option("--phase", sweep_phase, "Which phase to sweep")
      ->check(CLI::IsMember({"theta", "theta1", "theta2"}))
      ->required();
  sweep_cmd->add_option("--values", sweep_values, "Comma-separated angles (e.g. 0,0.5pi,pi)")
      ->delimiter(',')
      ->required();
  add_output_flags(sweep_cmd, sweep_opts);

  app.add_subcommand("selfcheck", "Run the invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    // Normalize: anything CLI11 rejects is a validation error.
    return code == 0 ? 0 : 1;
  }

  std::string scenario_name = "(none)";
  try {
    if (app.got_subcommand("list")) return list_command();
    if (app.got_subcommand("selfcheck")) return selfcheck_command();
    if (app.got_subcommand("run")) {
      scenario_name = run_target;
      return run_command(run_target, run_opts);
    }
    scenario_name = "sweep_" + sweep_phase;
    djc::Scenario sweep = make_sweep(sweep_phase, sweep_values);
    apply_overrides(sweep, sweep_opts);
    const djc::TimeSeriesTable table = djc::run_scenario(sweep);
    return emit(table, sweep_opts.format.value_or("csv"), sweep_opts.out_path.value_or("-"));
  } catch (const djc::integration_error& e) {
    std::cerr << "error: numerical failure in scenario '" << scenario_name << "': " << e.what()
              << " (time reached " << djc::format_double(e.time_reached()) << ")\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
