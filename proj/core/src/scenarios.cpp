#include "djc/scenarios.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "djc/information.hpp"
#include "djc/single_excitation.hpp"
#include "djc/two_atoms.hpp"
#include "djc/two_excitation.hpp"

namespace djc {

namespace {

constexpr double kPi = std::numbers::pi;

std::string format_param(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

// Lazily computed per-run series shared by the one-atom observables.
class OneAtomSeries {
 public:
  OneAtomSeries(const OneAtomRun& run, const ModelParams& params, const TimeGrid& grid,
                double tol)
      : run_(run), params_(params), grid_(grid), tol_(tol) {}

  const std::vector<PopulationTerms>& corr_terms() {
    if (corr_terms_.empty()) {
      corr_terms_.reserve(static_cast<size_t>(grid_.n_points()));
      for (int i = 0; i < grid_.n_points(); ++i)
        corr_terms_.push_back(excited_population_terms(run_.corr, params_, grid_.time(i)));
    }
    return corr_terms_;
  }

  const std::vector<SingleExcState>& trajectory() {
    if (trajectory_.empty())
      trajectory_ = evolve(run_.corr, params_, grid_, EvolveMethod::closed_form, tol_);
    return trajectory_;
  }

  const std::vector<double>& prod_population(const std::string& observable) {
    if (!run_.prod.has_value())
      throw std::invalid_argument("run_scenario: observable '" + observable +
                                  "' needs a product reference state, none configured");
    if (prod_population_.empty())
      prod_population_ = excited_population_product_series(*run_.prod, params_, grid_, tol_);
    return prod_population_;
  }

  const OneAtomRun& run() const { return run_; }

 private:
  OneAtomRun run_;
  ModelParams params_;
  TimeGrid grid_;
  double tol_;
  std::vector<PopulationTerms> corr_terms_;
  std::vector<SingleExcState> trajectory_;
  std::vector<double> prod_population_;
};

std::vector<double> eval_one_atom(const std::string& name, OneAtomSeries& series,
                                  const TimeGrid& grid, const std::string& scenario_name) {
  const size_t n = static_cast<size_t>(grid.n_points());
  std::vector<double> out(n);
  if (name == "population_corr" || name == "ptilde_corr" || name == "transfer_atom" ||
      name == "transfer_mode" || name == "interference") {
    const std::vector<PopulationTerms>& terms = series.corr_terms();
    if (name == "ptilde_corr") {
      const double p0 = terms.front().total();
      for (size_t i = 0; i < n; ++i) out[i] = rescaled_population(terms[i].total(), p0);
    } else {
      for (size_t i = 0; i < n; ++i) {
        if (name == "population_corr") out[i] = terms[i].total();
        else if (name == "transfer_atom") out[i] = terms[i].from_atom;
        else if (name == "transfer_mode") out[i] = terms[i].from_mode;
        else out[i] = terms[i].interference;
      }
    }
    return out;
  }
  if (name == "amp1_sq" || name == "amp2_sq" || name == "lambda_weight") {
    const std::vector<SingleExcState>& traj = series.trajectory();
    for (size_t i = 0; i < n; ++i) {
      if (name == "amp1_sq") out[i] = std::norm(traj[i].ct1);
      else if (name == "amp2_sq") out[i] = std::norm(traj[i].ct2);
      else out[i] = traj[i].lam;
    }
    return out;
  }
  if (name == "population_prod" || name == "ptilde_prod" || name == "distance" ||
      name == "distance_minus_d0" || name == "backflow") {
    const std::vector<double>& prod = series.prod_population(name);
    if (name == "population_prod") return prod;
    if (name == "ptilde_prod") {
      const double p0 = prod.front();
      for (size_t i = 0; i < n; ++i) out[i] = rescaled_population(prod[i], p0);
      return out;
    }
    const std::vector<PopulationTerms>& terms = series.corr_terms();
    std::vector<double> dist(n);
    for (size_t i = 0; i < n; ++i)
      dist[i] = atomic_trace_distance(PopulationPair{terms[i].total(), prod[i]});
    if (name == "distance") return dist;
    const double d0 = dist.front();
    for (size_t i = 0; i < n; ++i)
      out[i] = (name == "distance_minus_d0") ? dist[i] - d0 : (dist[i] > d0 + 1e-9 ? 1.0 : 0.0);
    return out;
  }
  if (name == "bound_i" || name == "bound_d0_plus_i") {
    const std::vector<double>& prod = series.prod_population(name);
    const std::vector<PopulationTerms>& terms = series.corr_terms();
    const double bound = initial_info_bound(series.run().corr, *series.run().prod);
    const double d0 =
        atomic_trace_distance(PopulationPair{terms.front().total(), prod.front()});
    const double value = (name == "bound_i") ? bound : d0 + bound;
    return std::vector<double>(n, value);
  }
  throw std::invalid_argument("run_scenario: unknown observable '" + name + "' in scenario '" +
                              scenario_name + "'");
}

std::vector<double> eval_two_atom(const std::string& name, const TwoAtomRun& run,
                                  const std::vector<TwoAtomState>& traj, const TimeGrid& grid,
                                  const std::string& scenario_name) {
  const size_t n = static_cast<size_t>(grid.n_points());
  std::vector<double> out(n);
  if (name == "concurrence") {
    for (size_t i = 0; i < n; ++i) out[i] = concurrence_pair(traj[i]);
    return out;
  }
  if (name == "concurrence_steady")
    return std::vector<double>(n, steady_concurrence(run.init));
  if (name == "amp1_sq" || name == "amp2_sq" || name == "amp3_sq" || name == "lambda_weight") {
    for (size_t i = 0; i < n; ++i) {
      if (name == "amp1_sq") out[i] = std::norm(traj[i].ct1);
      else if (name == "amp2_sq") out[i] = std::norm(traj[i].ct2);
      else if (name == "amp3_sq") out[i] = std::norm(traj[i].ct3);
      else out[i] = traj[i].lam;
    }
    return out;
  }
  throw std::invalid_argument("run_scenario: unknown observable '" + name + "' in scenario '" +
                              scenario_name + "'");
}

void echo_run_metadata(TimeSeriesTable& table, const ScenarioRun& run) {
  const ModelParams& p = run.params;
  table.add_metadata("run." + run.label + ".params",
                     "omega0=" + format_param(p.omega0) + ",omega_c=" + format_param(p.omega_c) +
                         ",Omega=" + format_param(p.Omega) + ",Gamma=" + format_param(p.Gamma) +
                         ",D=" + format_param(p.D));
  if (const OneAtomRun* one = std::get_if<OneAtomRun>(&run.init)) {
    std::string init = "c1=" + format_param(one->corr.c1()) + ",c2=" + format_param(one->corr.c2()) +
                       ",theta=" + format_param(one->corr.theta());
    if (one->prod.has_value()) {
      init += ",b1=" + format_param(one->prod->b1().real());
      if (one->prod->b1().imag() != 0.0) init += "+" + format_param(one->prod->b1().imag()) + "i";
      init += ",b2=" + format_param(one->prod->b2().real());
      if (one->prod->b2().imag() != 0.0) init += "+" + format_param(one->prod->b2().imag()) + "i";
      init += ",mode_p0=" + format_param(one->prod->mode_p0()) +
              ",mode_p1=" + format_param(one->prod->mode_p1());
    }
    table.add_metadata("run." + run.label + ".initial", init);
  } else {
    const TwoAtomRun& two = std::get<TwoAtomRun>(run.init);
    table.add_metadata("run." + run.label + ".initial",
                       "c1=" + format_param(two.init.c1()) + ",c2=" + format_param(two.init.c2()) +
                           ",c3=" + format_param(two.init.c3()) +
                           ",theta1=" + format_param(two.init.theta1()) +
                           ",theta2=" + format_param(two.init.theta2()));
  }
}

}  // namespace

const char* to_string(ModelKind m) {
  return m == ModelKind::one_atom ? "one-atom" : "two-atom";
}

TimeSeriesTable run_scenario(const Scenario& s) {
  if (s.runs.empty())
    throw std::invalid_argument("run_scenario: scenario '" + s.name + "' has no runs");
  for (const ScenarioRun& run : s.runs) {
    const bool is_one = std::holds_alternative<OneAtomRun>(run.init);
    if (is_one != (s.model == ModelKind::one_atom))
      throw std::invalid_argument("run_scenario: run '" + run.label +
                                  "' does not match the scenario model kind");
  }

  TimeSeriesTable table(s.name);
  table.add_metadata("scenario", s.name);
  table.add_metadata("title", s.title);
  table.add_metadata("model", to_string(s.model));
  table.add_metadata("grid.t_start", format_param(s.grid.t_start()));
  table.add_metadata("grid.t_end", format_param(s.grid.t_end()));
  table.add_metadata("grid.n_points", std::to_string(s.grid.n_points()));
  table.add_metadata("tol", format_param(s.tol));
  for (const ScenarioRun& run : s.runs) echo_run_metadata(table, run);

  // Abscissa in units Omega * t; all catalog runs share one Omega.
  const double omega_scale = s.runs.front().params.Omega;
  std::vector<double> abscissa(static_cast<size_t>(s.grid.n_points()));
  for (int i = 0; i < s.grid.n_points(); ++i)
    abscissa[static_cast<size_t>(i)] = omega_scale * s.grid.time(i);
  table.add_column("omega_t", std::move(abscissa));

  if (s.model == ModelKind::one_atom) {
    std::vector<OneAtomSeries> series;
    series.reserve(s.runs.size());
    for (const ScenarioRun& run : s.runs)
      series.emplace_back(std::get<OneAtomRun>(run.init), run.params, s.grid, s.tol);
    for (const std::string& obs : s.observables)
      for (size_t r = 0; r < s.runs.size(); ++r)
        table.add_column(obs + "_" + s.runs[r].label,
                         eval_one_atom(obs, series[r], s.grid, s.name));
    for (const std::string& obs : s.shared_observables)
      table.add_column(obs, eval_one_atom(obs, series.front(), s.grid, s.name));
  } else {
    std::vector<std::vector<TwoAtomState>> trajectories;
    trajectories.reserve(s.runs.size());
    for (const ScenarioRun& run : s.runs)
      trajectories.push_back(
          evolve_two_atoms(std::get<TwoAtomRun>(run.init).init, run.params, s.grid, s.tol));
    for (const std::string& obs : s.observables)
      for (size_t r = 0; r < s.runs.size(); ++r)
        table.add_column(obs + "_" + s.runs[r].label,
                         eval_two_atom(obs, std::get<TwoAtomRun>(s.runs[r].init),
                                       trajectories[r], s.grid, s.name));
    for (const std::string& obs : s.shared_observables)
      table.add_column(obs, eval_two_atom(obs, std::get<TwoAtomRun>(s.runs.front().init),
                                          trajectories.front(), s.grid, s.name));
  }
  table.validate();
  return table;
}

namespace {

// Fig. 1 amplitude combos (c1^2, label) — c2^2 is the complement.
struct AmpCombo {
  double c1sq;
  const char* label;
};
constexpr AmpCombo kFig1Combos[] = {{0.1, "c1sq_0.1"}, {0.5, "c1sq_0.5"}, {0.9, "c1sq_0.9"}};

struct PhaseTag {
  double theta;
  const char* label;
};
const PhaseTag kFig1Phases[] = {{0.0, "theta_0"}, {0.5 * kPi, "theta_0.5pi"},
                                {1.5 * kPi, "theta_1.5pi"}};

Scenario fig1_transfer(const std::string& name, double gamma_over_omega) {
  Scenario s;
  s.name = name;
  s.title = "Rescaled excited-state population, correlated vs product start, theta=0, Gamma/Omega=" +
            format_param(gamma_over_omega);
  s.model = ModelKind::one_atom;
  s.grid = TimeGrid(0.0, 15.0, 1501);
  s.observables = {"ptilde_corr", "ptilde_prod"};
  const ModelParams params = ModelParams::resonant(1.0, gamma_over_omega);
  for (const AmpCombo& combo : kFig1Combos) {
    const CorrelatedInit corr(std::sqrt(combo.c1sq), std::sqrt(1.0 - combo.c1sq), 0.0);
    s.runs.push_back(
        ScenarioRun{combo.label, params, OneAtomRun{corr, product_from_marginals(corr)}});
  }
  return s;
}

Scenario fig1_phases(const std::string& name, double gamma_over_omega) {
  Scenario s;
  s.name = name;
  s.title = "Rescaled excited-state population over relative phase, Gamma/Omega=" +
            format_param(gamma_over_omega);
  s.model = ModelKind::one_atom;
  s.grid = TimeGrid(0.0, 15.0, 1501);
  s.observables = {"ptilde_corr"};
  const ModelParams params = ModelParams::resonant(1.0, gamma_over_omega);
  for (const AmpCombo& combo : kFig1Combos) {
    const double c1 = std::sqrt(combo.c1sq);
    const double c2 = std::sqrt(1.0 - combo.c1sq);
    for (const PhaseTag& phase : kFig1Phases) {
      s.runs.push_back(ScenarioRun{std::string(combo.label) + "_" + phase.label, params,
                                   OneAtomRun{CorrelatedInit(c1, c2, phase.theta), {}}});
    }
  }
  return s;
}

Scenario fig2_distance(const std::string& name, double theta, const std::string& theta_label) {
  Scenario s;
  s.name = name;
  s.title = "Atomic trace distance, correlated vs product start, theta=" + theta_label;
  s.model = ModelKind::one_atom;
  s.grid = TimeGrid(0.0, 500.0, 50001);
  s.observables = {"distance", "distance_minus_d0", "backflow"};
  s.shared_observables = {"bound_i", "bound_d0_plus_i"};
  // Correlated amplitudes sqrt(4/7), sqrt(3/7) e^{i theta}; the product
  // partner swaps the moduli: B1 = C2, B2 = C1, mode weights (|C1|^2, |C2|^2).
  const double m1 = std::sqrt(4.0 / 7.0);
  const double m2 = std::sqrt(3.0 / 7.0);
  const CorrelatedInit corr(m1, m2, theta);
  const ProductInit prod(corr.C2(), corr.C1(), m1 * m1, m2 * m2);
  const double gammas[] = {0.0, 1.0, 6.0};
  const char* labels[] = {"gamma_0", "gamma_1", "gamma_6"};
  for (int k = 0; k < 3; ++k) {
    s.runs.push_back(ScenarioRun{labels[k], ModelParams::resonant(1.0, gammas[k]),
                                 OneAtomRun{corr, prod}});
  }
  return s;
}

Scenario fig3_sweep(const std::string& name, bool sweep_theta1) {
  Scenario s;
  s.name = name;
  s.title = sweep_theta1 ? "Two-atom concurrence over theta1 (theta2=0), Gamma/Omega=6"
                         : "Two-atom concurrence over theta2 (theta1=0), Gamma/Omega=6";
  s.model = ModelKind::two_atom;
  s.grid = TimeGrid(0.0, 15.0, 1501);
  s.observables = {"concurrence", "concurrence_steady"};
  const ModelParams params = ModelParams::resonant(1.0, 6.0);
  const double c1 = std::sqrt(0.5);
  const double c2 = std::sqrt(0.1);
  const double c3 = std::sqrt(0.4);
  const PhaseTag phases[] = {{0.0, "0"},           {0.25 * kPi, "0.25pi"}, {0.5 * kPi, "0.5pi"},
                             {0.75 * kPi, "0.75pi"}, {kPi, "pi"}};
  const std::string prefix = sweep_theta1 ? "theta1_" : "theta2_";
  for (const PhaseTag& phase : phases) {
    const double theta1 = sweep_theta1 ? phase.theta : 0.0;
    const double theta2 = sweep_theta1 ? 0.0 : phase.theta;
    s.runs.push_back(ScenarioRun{prefix + phase.label, params,
                                 TwoAtomRun{TwoAtomInit(c1, c2, c3, theta1, theta2)}});
  }
  return s;
}

}  // namespace

std::vector<Scenario> catalog() {
  std::vector<Scenario> all;
  all.push_back(fig1_transfer("fig1a", 6.0));
  all.push_back(fig1_transfer("fig1b", 1.0));
  all.push_back(fig1_phases("fig1c", 6.0));
  all.push_back(fig1_phases("fig1d", 1.0));
  all.push_back(fig2_distance("fig2a", 0.5 * kPi, "0.5pi"));
  all.push_back(fig2_distance("fig2b", 0.0, "0"));
  all.push_back(fig2_distance("fig2c", 1.5 * kPi, "1.5pi"));
  all.push_back(fig3_sweep("fig3a", false));
  all.push_back(fig3_sweep("fig3b", true));
  return all;
}

std::optional<Scenario> find_scenario(const std::string& name) {
  for (Scenario& s : catalog())
    if (s.name == name) return std::move(s);
  return std::nullopt;
}

}  // namespace djc
