#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "djc/model.hpp"
#include "djc/table.hpp"
#include "djc/time_grid.hpp"

namespace djc {

enum class ModelKind { one_atom, two_atom };
const char* to_string(ModelKind m);

/// One-atom run: a correlated initial state and, when product-side
/// observables are wanted, its product reference partner.
struct OneAtomRun {
  CorrelatedInit corr;
  std::optional<ProductInit> prod;
};

struct TwoAtomRun {
  TwoAtomInit init;
};

/// A labeled curve within a scenario: complete parameter set plus initial
/// state. The label suffixes the observable column names.
struct ScenarioRun {
  std::string label;
  ModelParams params;
  std::variant<OneAtomRun, TwoAtomRun> init;
};

/// Declarative experiment: grid, integrator tolerance, runs, and the
/// observables to tabulate. `observables` are evaluated per run (columns
/// named <observable>_<label>); `shared_observables` once, on the first run
/// (plain column names) — used for initial-state constants like the
/// information bound that coincide across runs.
struct Scenario {
  std::string name;
  std::string title;
  ModelKind model = ModelKind::one_atom;
  TimeGrid grid{0.0, 1.0, 2};
  double tol = 1e-10;
  std::vector<std::string> observables;
  std::vector<std::string> shared_observables;
  std::vector<ScenarioRun> runs;
};

/// One-atom observables: population_corr, ptilde_corr, transfer_atom,
/// transfer_mode, interference, amp1_sq, amp2_sq, lambda_weight, and (with a
/// product partner) population_prod, ptilde_prod, distance,
/// distance_minus_d0, backflow; shared: bound_i, bound_d0_plus_i.
/// Two-atom observables: concurrence, concurrence_steady, amp1_sq, amp2_sq,
/// amp3_sq, lambda_weight.
/// Unknown names are rejected with the offending name in the message.
TimeSeriesTable run_scenario(const Scenario& s);

/// The figure catalog: fig1a-fig1d, fig2a-fig2c, fig3a, fig3b.
std::vector<Scenario> catalog();

/// Catalog lookup by name; empty when absent.
std::optional<Scenario> find_scenario(const std::string& name);

}  // namespace djc
