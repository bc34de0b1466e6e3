#include "djc/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "djc/information.hpp"
#include "djc/lindblad.hpp"
#include "djc/linalg.hpp"
#include "djc/model.hpp"
#include "djc/ode.hpp"
#include "djc/scenarios.hpp"
#include "djc/single_excitation.hpp"
#include "djc/table.hpp"
#include "djc/two_atoms.hpp"
#include "djc/two_excitation.hpp"

namespace djc {

namespace {

constexpr double kPi = std::numbers::pi;

std::string describe(double measured, double threshold, const char* relation = "<=") {
  std::ostringstream os;
  os.precision(3);
  os << "measured " << measured << " (" << relation << " " << threshold << ")";
  return os.str();
}

// Random Hermitian matrix with entries of order 1, deterministic seed.
ComplexMatrix random_hermitian(std::mt19937& rng, int dim) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ComplexMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = Complex(u(rng), u(rng));
  return 0.5 * (m + m.adjoint());
}

DensityMatrix random_state(std::mt19937& rng, int dim) {
  // m m^dagger normalized: Hermitian, positive, unit trace.
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ComplexMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = Complex(u(rng), u(rng));
  ComplexMatrix p = m * m.adjoint();
  p /= p.trace();
  return DensityMatrix::from_matrix(p);
}

void check(std::vector<CheckResult>& out, const std::string& name, bool passed,
           const std::string& detail) {
  out.push_back(CheckResult{name, passed, detail});
}

void integrator_checks(std::vector<CheckResult>& results) {
  // Exponential decay against the closed form.
  const OdeRhs decay = [](double, const ComplexVector& y) { return (-y).eval(); };
  ComplexVector one(1);
  one << Complex(1.0, 0.0);
  {
    const TimeGrid grid(0.0, 1.0, 11);
    const auto traj = integrate_ode(decay, one, grid, 1e-10);
    const double err = std::abs(traj.back()[0] - std::exp(-1.0));
    check(results, "integrator reproduces exponential decay", err <= 1e-9, describe(err, 1e-9));
  }
  {
    // Tightening the tolerance must not increase the error.
    const TimeGrid grid(0.0, 4.0, 5);
    double tol = 1e-5;
    double prev = 1e300;
    bool monotone = true;
    double worst_ratio = 0.0;
    for (int k = 0; k < 16; ++k, tol *= 0.5) {
      const auto traj = integrate_ode(decay, one, grid, tol);
      const double err = std::abs(traj.back()[0] - std::exp(-4.0));
      if (err > prev + 5e-15) {
        monotone = false;
        worst_ratio = std::max(worst_ratio, err - prev);
      }
      prev = err;
    }
    check(results, "halving tolerance never increases integrator error", monotone,
          monotone ? "16 halvings from 1e-5" : describe(worst_ratio, 5e-15));
  }
  {
    const OdeRhs rotate = [](double, const ComplexVector& y) {
      return (-imag_unit * y).eval();
    };
    const TimeGrid grid(0.0, 10.0, 21);
    const auto traj = integrate_ode(rotate, one, grid, 1e-10);
    double worst = 0.0;
    for (const auto& y : traj) worst = std::max(worst, std::abs(std::abs(y[0]) - 1.0));
    check(results, "phase rotation preserves modulus", worst <= 1e-9, describe(worst, 1e-9));
  }
}

void propagator_checks(std::vector<CheckResult>& results) {
  // Closed form vs direct integration of the amplitude equations, including
  // the critical point Gamma = 4 Omega handled by the series branch.
  double worst = 0.0;
  for (double gamma : {0.0, 1.0, 2.0, 4.0, 6.0, 10.0}) {
    const ModelParams p = ModelParams::resonant(1.0, gamma);
    const TimeGrid grid(0.0, 20.0, 201);
    for (const CorrelatedInit& init :
         {CorrelatedInit(1.0, 0.0, 0.0), CorrelatedInit(0.0, 1.0, 0.0)}) {
      const auto closed = evolve(init, p, grid, EvolveMethod::closed_form);
      const auto numeric = evolve(init, p, grid, EvolveMethod::ode, 1e-12);
      for (size_t i = 0; i < closed.size(); ++i) {
        worst = std::max(worst, std::abs(closed[i].ct1 - numeric[i].ct1));
        worst = std::max(worst, std::abs(closed[i].ct2 - numeric[i].ct2));
      }
    }
  }
  check(results, "propagator closed form matches integration across damping grid", worst <= 1e-8,
        describe(worst, 1e-8));

  double worst_imag = 0.0;
  for (double gamma : {0.0, 1.0, 6.0}) {
    const ModelParams p = ModelParams::resonant(1.0, gamma, 0.7);
    for (int i = 0; i <= 100; ++i) {
      const Propagator prop = propagator(p, 0.2 * i);
      worst_imag = std::max(worst_imag, std::abs((prop.mu * std::conj(prop.nu)).imag()));
    }
  }
  check(results, "mu nu* stays real on resonance", worst_imag <= 1e-10,
        describe(worst_imag, 1e-10));
}

void single_excitation_checks(std::vector<CheckResult>& results) {
  const ModelParams weak = ModelParams::resonant(1.0, 6.0);
  {
    double worst = 0.0;
    for (double theta : {0.0, 0.3, 0.5 * kPi, 1.5 * kPi}) {
      const CorrelatedInit init(std::sqrt(0.3), std::sqrt(0.7), theta);
      const auto traj = evolve(init, weak, TimeGrid(0.0, 30.0, 301), EvolveMethod::ode);
      for (const auto& s : traj)
        worst = std::max(worst,
                         std::abs(std::norm(s.ct1) + std::norm(s.ct2) + s.lam - 1.0));
    }
    check(results, "single-excitation norm identity", worst <= 1e-8, describe(worst, 1e-8));
  }
  {
    double worst = 0.0;
    const CorrelatedInit init(std::sqrt(0.3), std::sqrt(0.7), 0.0);
    const auto traj = evolve(init, weak, TimeGrid(0.0, 30.0, 301));
    double prev = 1.0 + 1e-15;
    for (const auto& s : traj) {
      const double norm2 = std::norm(s.ct1) + std::norm(s.ct2);
      worst = std::max(worst, norm2 - prev);
      prev = norm2;
    }
    check(results, "pure-branch norm is non-increasing", worst <= 1e-9, describe(worst, 1e-9));
  }
  {
    double worst = 0.0;
    for (double theta : {0.1, 0.7, 0.5 * kPi, 2.5}) {
      const CorrelatedInit a(std::sqrt(0.4), std::sqrt(0.6), theta);
      const CorrelatedInit b(std::sqrt(0.4), std::sqrt(0.6), 2.0 * kPi - theta);
      for (double t : {0.5, 2.0, 7.5}) {
        const double ia = excited_population_terms(a, weak, t).interference;
        const double ib = excited_population_terms(b, weak, t).interference;
        worst = std::max(worst, std::abs(ia + ib));
      }
    }
    check(results, "interference addend is antisymmetric in theta", worst <= 1e-12,
          describe(worst, 1e-12));
  }
}

void two_excitation_checks(std::vector<CheckResult>& results) {
  {
    double worst = 0.0;
    for (double gamma : {0.0, 1.0, 6.0}) {
      const ModelParams p = ModelParams::resonant(1.0, gamma, 1.0);
      const TimeGrid grid(0.0, 20.0, 201);
      const auto sector = evolve_e1(p, grid);
      const LindbladOracle oracle(p, 1, 2);
      ComplexMatrix rho0 = ComplexMatrix::Zero(6, 6);
      rho0(oracle.index({0}, 1), oracle.index({0}, 1)) = 1.0;
      const auto ref = oracle.evolve(DensityMatrix::from_matrix(rho0), grid);
      const int i_e1 = oracle.index({0}, 1), i_g2 = oracle.index({1}, 2);
      const int i_e0 = oracle.index({0}, 0), i_g1 = oracle.index({1}, 1);
      for (size_t k = 0; k < sector.size(); ++k) {
        const ComplexMatrix& r = ref[k].matrix();
        worst = std::max({worst, std::abs(sector[k].r11 - r(i_e1, i_e1).real()),
                          std::abs(sector[k].r22 - r(i_g2, i_g2).real()),
                          std::abs(sector[k].r33 - r(i_e0, i_e0).real()),
                          std::abs(sector[k].r44 - r(i_g1, i_g1).real()),
                          std::abs(sector[k].r12 - r(i_e1, i_g2)),
                          std::abs(sector[k].r34 - r(i_e0, i_g1))});
      }
    }
    check(results, "six-equation sector matches the master-equation oracle", worst <= 1e-8,
          describe(worst, 1e-8));
  }
  {
    const ModelParams p = ModelParams::resonant(1.0, 1.0, 1.0);
    const TimeGrid grid(0.0, 5.0, 51);
    const double kept = e1_trace_defect(p, grid, 1e-10, false).back();
    const std::vector<double> defects = e1_trace_defect(p, grid, 1e-10, true);
    const double broken = *std::max_element(defects.begin(), defects.end());
    check(results, "standard sector equations conserve trace", kept <= 1e-9,
          describe(kept, 1e-9));
    check(results, "rejected rho44 frequency term visibly breaks trace conservation",
          broken > 1e-3, describe(broken, 1e-3, ">"));
  }
}

void information_checks(std::vector<CheckResult>& results) {
  const double m1 = std::sqrt(4.0 / 7.0), m2 = std::sqrt(3.0 / 7.0);
  {
    double worst = 0.0;
    double ref = -1.0;
    for (double theta : {0.0, 0.5 * kPi, kPi, 1.5 * kPi}) {
      const CorrelatedInit corr(m1, m2, theta);
      const ProductInit prod(corr.C2(), corr.C1(), m1 * m1, m2 * m2);
      const double bound = initial_info_bound(corr, prod);
      if (ref < 0.0) ref = bound;
      worst = std::max(worst, std::abs(bound - ref));
    }
    check(results, "information bound is phase independent", worst <= 1e-12,
          describe(worst, 1e-12));
    check(results, "information bound equals 30/49 for the swapped-amplitude pair",
          std::abs(ref - 30.0 / 49.0) <= 1e-12, describe(std::abs(ref - 30.0 / 49.0), 1e-12));
  }
  {
    // Bound respected on a coarse version of every distance scenario.
    double worst_excess = -1.0;
    for (double theta : {0.0, 0.5 * kPi, 1.5 * kPi}) {
      const CorrelatedInit corr(m1, m2, theta);
      const ProductInit prod(corr.C2(), corr.C1(), m1 * m1, m2 * m2);
      for (double gamma : {0.0, 1.0, 6.0}) {
        const TimeSeriesTable table = distance_series(
            corr, prod, ModelParams::resonant(1.0, gamma), TimeGrid(0.0, 100.0, 2001));
        const std::vector<double>& excess = table.column("distance_minus_d0");
        const double bound = table.column("bound_i").front();
        for (double e : excess) worst_excess = std::max(worst_excess, e - bound);
      }
    }
    check(results, "distance excess never exceeds the initial-information bound",
          worst_excess <= 1e-9, describe(worst_excess, 1e-9));
  }
  {
    // The atom-mode semigroup contracts the trace distance.
    const ModelParams p = ModelParams::resonant(1.0, 1.0);
    const LindbladOracle oracle(p, 1, 2);
    ComplexMatrix a0 = ComplexMatrix::Zero(6, 6);
    a0(oracle.index({0}, 1), oracle.index({0}, 1)) = 1.0;
    ComplexMatrix b0 = ComplexMatrix::Zero(6, 6);
    b0(oracle.index({1}, 0), oracle.index({1}, 0)) = 0.5;
    b0(oracle.index({0}, 0), oracle.index({0}, 0)) = 0.5;
    b0(oracle.index({0}, 0), oracle.index({1}, 0)) = 0.35;
    b0(oracle.index({1}, 0), oracle.index({0}, 0)) = 0.35;
    const TimeGrid grid(0.0, 10.0, 201);
    const auto ta = oracle.evolve(DensityMatrix::from_matrix(a0), grid);
    const auto tb = oracle.evolve(DensityMatrix::from_matrix(b0), grid);
    double worst = 0.0;
    double prev = 2.0;
    for (size_t i = 0; i < ta.size(); ++i) {
      const double d = trace_distance(ta[i], tb[i]);
      worst = std::max(worst, d - prev);
      prev = d;
    }
    check(results, "oracle evolution contracts the trace distance", worst <= 1e-9,
          describe(worst, 1e-9));
  }
}

void two_atom_checks(std::vector<CheckResult>& results) {
  const ModelParams p = ModelParams::resonant(1.0, 6.0);
  {
    const TwoAtomInit dark(std::sqrt(0.5), std::sqrt(0.5), 0.0, kPi, 0.0);
    const auto traj = evolve_two_atoms(dark, p, TimeGrid(0.0, 20.0, 201));
    double worst = 0.0;
    for (const auto& s : traj)
      worst = std::max({worst, std::abs(std::abs(s.ct1) - std::sqrt(0.5)),
                        std::abs(std::abs(s.ct2) - std::sqrt(0.5))});
    check(results, "antisymmetric dark state keeps constant moduli", worst <= 1e-8,
          describe(worst, 1e-8));
  }
  {
    double worst = 0.0;
    const TwoAtomInit init(std::sqrt(0.5), std::sqrt(0.1), std::sqrt(0.4), 0.6, 1.1);
    const auto traj = evolve_two_atoms(init, p, TimeGrid(0.0, 20.0, 201));
    for (const auto& s : traj) {
      const double defect = std::abs(std::norm(s.ct1) + std::norm(s.ct2) + std::norm(s.ct3) +
                                     s.lam - 1.0);
      worst = std::max(worst, defect);
    }
    check(results, "two-atom norm identity", worst <= 1e-8, describe(worst, 1e-8));
  }
  {
    double worst = 0.0;
    const TwoAtomInit init(std::sqrt(0.5), std::sqrt(0.1), std::sqrt(0.4), kPi, 0.5 * kPi);
    const auto traj = evolve_two_atoms(init, p, TimeGrid(0.0, 15.0, 151));
    for (const auto& s : traj) {
      const double direct = concurrence_pair(s);
      const double wootters = wootters_concurrence(reduced_two_atom_state(s));
      worst = std::max(worst, std::abs(direct - wootters));
    }
    check(results, "Wootters concurrence reduces to 2|ct1 ct2|", worst <= 1e-9,
          describe(worst, 1e-9));
  }
  {
    double worst = 0.0;
    for (double theta1 : {0.0, kPi}) {
      for (double theta2 : {0.0, 0.25 * kPi, 0.5 * kPi, kPi}) {
        const TwoAtomInit init(std::sqrt(0.5), std::sqrt(0.1), std::sqrt(0.4), theta1, theta2);
        const auto traj = evolve_two_atoms(init, p, TimeGrid(0.0, 50.0, 501));
        const double steady = concurrence_pair(traj.back());
        worst = std::max(worst, std::abs(steady - steady_concurrence(init)));
      }
    }
    check(results, "steady concurrence matches the dark-state formula", worst <= 1e-4,
          describe(worst, 1e-4));
  }
}

void linalg_checks(std::vector<CheckResult>& results) {
  std::mt19937 rng(20240817);
  {
    double worst = 0.0;
    for (int dim : {3, 4, 6, 8}) {
      for (int rep = 0; rep < 4; ++rep) {
        const ComplexMatrix m = random_hermitian(rng, dim);
        const EigenSystem sys = hermitian_eigensystem(m);
        ComplexMatrix recon = ComplexMatrix::Zero(dim, dim);
        for (int k = 0; k < dim; ++k)
          recon += sys.values[static_cast<size_t>(k)] *
                   (sys.vectors.col(k) * sys.vectors.col(k).adjoint());
        worst = std::max(worst, (recon - m).cwiseAbs().maxCoeff());
        double sum = 0.0;
        for (double v : sys.values) sum += v;
        worst = std::max(worst, std::abs(sum - m.trace().real()));
      }
    }
    check(results, "eigensystem reconstructs random Hermitian matrices", worst <= 1e-10,
          describe(worst, 1e-10));
  }
  {
    double worst = 0.0;
    for (int rep = 0; rep < 8; ++rep) {
      const DensityMatrix a = random_state(rng, 4);
      const DensityMatrix b = random_state(rng, 4);
      const DensityMatrix c = random_state(rng, 4);
      const double ab = trace_distance(a, b);
      const double ba = trace_distance(b, a);
      const double ac = trace_distance(a, c);
      const double cb = trace_distance(c, b);
      worst = std::max(worst, std::abs(ab - ba));
      worst = std::max(worst, ab - (ac + cb));
    }
    check(results, "trace distance is symmetric and satisfies the triangle inequality",
          worst <= 1e-9, describe(worst, 1e-9));
  }
}

void determinism_check(std::vector<CheckResult>& results) {
  const Scenario fig1a = find_scenario("fig1a").value();
  std::ostringstream first, second;
  write_csv(run_scenario(fig1a), first);
  write_csv(run_scenario(fig1a), second);
  check(results, "re-running a scenario is bitwise deterministic", first.str() == second.str(),
        first.str() == second.str() ? "identical CSV bytes" : "outputs differ");
}

}  // namespace

std::vector<CheckResult> run_selfcheck() {
  std::vector<CheckResult> results;
  integrator_checks(results);
  propagator_checks(results);
  single_excitation_checks(results);
  two_excitation_checks(results);
  information_checks(results);
  two_atom_checks(results);
  linalg_checks(results);
  determinism_check(results);
  return results;
}

}  // namespace djc
