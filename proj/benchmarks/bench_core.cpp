// Microbenchmarks for the hot paths of the simulation core: the closed-form
// propagator, the ODE integrators behind each model, and the table assembly
// that the CLI runs per scenario.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "djc/information.hpp"
#include "djc/lindblad.hpp"
#include "djc/model.hpp"
#include "djc/scenarios.hpp"
#include "djc/single_excitation.hpp"
#include "djc/two_atoms.hpp"
#include "djc/two_excitation.hpp"

namespace {

const djc::ModelParams kWeak = djc::ModelParams::resonant(1.0, 6.0);
const djc::ModelParams kStrong = djc::ModelParams::resonant(1.0, 1.0);

djc::CorrelatedInit figure_corr(double theta) {
  return djc::CorrelatedInit(std::sqrt(4.0 / 7.0), std::sqrt(3.0 / 7.0), theta);
}

void BM_Propagator(benchmark::State& state) {
  double t = 0.0;
  for (auto _ : state) {
    t += 1e-3;
    benchmark::DoNotOptimize(djc::propagator(kWeak, t));
  }
}
BENCHMARK(BM_Propagator);

void BM_SingleExcClosedForm(benchmark::State& state) {
  const djc::CorrelatedInit init(std::sqrt(0.1), std::sqrt(0.9), 0.0);
  const djc::TimeGrid grid(0.0, 15.0, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        djc::evolve(init, kWeak, grid, djc::EvolveMethod::closed_form));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SingleExcClosedForm)->Arg(256)->Arg(1501);

void BM_SingleExcOde(benchmark::State& state) {
  const djc::CorrelatedInit init(std::sqrt(0.1), std::sqrt(0.9), 0.0);
  const djc::TimeGrid grid(0.0, 15.0, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(djc::evolve(init, kWeak, grid, djc::EvolveMethod::ode));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SingleExcOde)->Arg(256)->Arg(1501);

void BM_TwoExcSector(benchmark::State& state) {
  const djc::TimeGrid grid(0.0, 15.0, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(djc::evolve_e1(kWeak, grid));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TwoExcSector)->Arg(256)->Arg(1501);

void BM_LindbladOneAtom(benchmark::State& state) {
  const djc::LindbladOracle oracle(djc::ModelParams::resonant(1.0, 1.0, 0.7), 1, 2);
  djc::ComplexMatrix m = djc::ComplexMatrix::Zero(oracle.dim(), oracle.dim());
  m(oracle.index({0}, 1), oracle.index({0}, 1)) = 1.0;
  const djc::DensityMatrix rho0 = djc::DensityMatrix::from_matrix(m);
  const djc::TimeGrid grid(0.0, 10.0, 41);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle.evolve(rho0, grid));
  }
}
BENCHMARK(BM_LindbladOneAtom);

void BM_TwoAtomEvolve(benchmark::State& state) {
  const djc::TwoAtomInit init(std::sqrt(0.5), std::sqrt(0.1), std::sqrt(0.4), 0.0, 0.0);
  const djc::TimeGrid grid(0.0, 15.0, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(djc::evolve_two_atoms(init, kStrong, grid));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TwoAtomEvolve)->Arg(256)->Arg(1501);

void BM_WoottersConcurrence(benchmark::State& state) {
  const djc::TwoAtomInit init(std::sqrt(0.5), std::sqrt(0.1), std::sqrt(0.4), 3.14159, 0.0);
  const djc::TimeGrid grid(0.0, 5.0, 2);
  const auto traj = djc::evolve_two_atoms(init, kStrong, grid);
  const djc::DensityMatrix rho = djc::reduced_two_atom_state(traj.back());
  for (auto _ : state) {
    benchmark::DoNotOptimize(djc::wootters_concurrence(rho));
  }
}
BENCHMARK(BM_WoottersConcurrence);

void BM_DistanceSeries(benchmark::State& state) {
  const djc::CorrelatedInit corr = figure_corr(0.5 * 3.141592653589793);
  const djc::ProductInit prod = djc::product_from_marginals(corr);
  const djc::TimeGrid grid(0.0, 100.0, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(djc::distance_series(corr, prod, kStrong, grid));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DistanceSeries)->Arg(1001);

void BM_ScenarioFig1a(benchmark::State& state) {
  const djc::Scenario s = *djc::find_scenario("fig1a");
  for (auto _ : state) {
    benchmark::DoNotOptimize(djc::run_scenario(s));
  }
}
BENCHMARK(BM_ScenarioFig1a);

void BM_ScenarioFig3b(benchmark::State& state) {
  const djc::Scenario s = *djc::find_scenario("fig3b");
  for (auto _ : state) {
    benchmark::DoNotOptimize(djc::run_scenario(s));
  }
}
BENCHMARK(BM_ScenarioFig3b);

}  // namespace

BENCHMARK_MAIN();
