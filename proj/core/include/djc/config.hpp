#pragma once

#include <string>
#include <vector>

#include "djc/scenarios.hpp"
#include "djc/types.hpp"

namespace djc {

/// Angle in radians from a token: a plain number ("1.57"), or a multiple of
/// pi written as "<factor>pi" ("0.5pi", "pi", "1.5pi", "-0.25pi") so catalog
/// phases avoid decimal-pi drift. Throws std::invalid_argument on junk.
double parse_angle_token(const std::string& token);

/// Flat, validated run description mirroring the JSON config schema. All
/// angles are stored in radians (the parser accepts pi-multiple strings).
struct RunConfig {
  std::string model = "one-atom";  // or "two-atom"

  // params
  double omega0 = 0.0;
  double omega_c = 0.0;
  double Omega = 1.0;
  double Gamma = 0.0;
  double D = 0.0;

  // one-atom initial state (correlated amplitudes + optional product partner)
  double c1 = 0.0;
  double c2 = 0.0;
  double theta = 0.0;
  bool product_given = false;
  bool product_marginals = false;  // partner spelled "marginals"
  Complex b1{0.0, 0.0};
  Complex b2{0.0, 0.0};
  double mode_p0 = 0.0;
  double mode_p1 = 0.0;

  // two-atom initial state
  double c3 = 0.0;
  double theta1 = 0.0;
  double theta2 = 0.0;

  // grid
  double t_end = 15.0;
  int n_points = 1501;

  std::vector<std::string> observables;  // empty -> model defaults

  // output
  std::string out_path = "-";
  std::string format = "csv";

  bool operator==(const RunConfig&) const = default;
};

/// Parses and validates a JSON document; error messages name the offending
/// field. Unknown keys are rejected (they are nearly always typos).
RunConfig parse_run_config(const std::string& text);

/// Inverse of parse_run_config: parse(serialize(c)) == c exactly.
std::string serialize_run_config(const RunConfig& c);

/// Builds a runnable single-run scenario named `name` from the config.
/// Default observables: ptilde_corr (+ ptilde_prod, distance columns when a
/// product partner is configured) for one-atom; concurrence and
/// concurrence_steady for two-atom.
Scenario scenario_from_config(const RunConfig& c, const std::string& name);

}  // namespace djc
