#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "djc/lindblad.hpp"
#include "djc/model.hpp"
#include "djc/time_grid.hpp"
#include "djc/two_excitation.hpp"
#include "doctest.h"

using namespace djc;

namespace {

double hermiticity_defect_of(const ComplexMatrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("constructor validation") {
  const ModelParams p = ModelParams::resonant(1.0, 1.0);
  CHECK_THROWS_AS(LindbladOracle(p, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(LindbladOracle(p, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(LindbladOracle(p, 1, 0), std::invalid_argument);
  CHECK(LindbladOracle(p, 1, 2).dim() == 6);
  CHECK(LindbladOracle(p, 2, 1).dim() == 8);
}

TEST_CASE("basis indexing") {
  const LindbladOracle one(ModelParams::resonant(1.0, 1.0), 1, 2);
  CHECK(one.index({0}, 0) == 0);
  CHECK(one.index({0}, 2) == 2);
  CHECK(one.index({1}, 0) == 3);
  CHECK(one.index({1}, 2) == 5);
  CHECK_THROWS_AS(one.index({0, 0}, 0), std::invalid_argument);
  CHECK_THROWS_AS(one.index({0}, 3), std::invalid_argument);
  CHECK_THROWS_AS(one.index({2}, 0), std::invalid_argument);

  const LindbladOracle two(ModelParams::resonant(1.0, 1.0), 2, 1);
  CHECK(two.index({0, 0}, 0) == 0);
  CHECK(two.index({0, 1}, 0) == 2);
  CHECK(two.index({1, 0}, 1) == 5);
  CHECK(two.index({1, 1}, 1) == 7);
  CHECK_THROWS_AS(two.index({0}, 0), std::invalid_argument);
}

TEST_CASE("operators are structurally sound") {
  const LindbladOracle oracle(ModelParams::resonant(1.0, 1.0, 0.7), 1, 2);
  CHECK(hermiticity_defect_of(oracle.hamiltonian()) <= 1e-14);
  // Mode lowering has sqrt(n) matrix elements within each atomic block.
  const ComplexMatrix& b = oracle.mode_lowering();
  CHECK(b(0, 1).real() == doctest::Approx(1.0));
  CHECK(b(1, 2).real() == doctest::Approx(std::sqrt(2.0)));
  CHECK(std::abs(b(2, 1)) == 0.0);
}

TEST_CASE("generator is trace-free and Hermiticity-preserving") {
  const LindbladOracle oracle(ModelParams::resonant(1.0, 2.0, 0.5), 1, 2);
  // A valid mixed state with coherences inside the single-excitation pair.
  ComplexMatrix rho = ComplexMatrix::Zero(6, 6);
  rho(oracle.index({0}, 0), oracle.index({0}, 0)) = 0.4;
  rho(oracle.index({1}, 1), oracle.index({1}, 1)) = 0.35;
  rho(oracle.index({1}, 0), oracle.index({1}, 0)) = 0.25;
  rho(oracle.index({0}, 0), oracle.index({1}, 1)) = Complex(0.2, 0.1);
  rho(oracle.index({1}, 1), oracle.index({0}, 0)) = Complex(0.2, -0.1);
  const ComplexMatrix deriv = oracle.rhs(rho);
  CHECK(hermiticity_defect_of(deriv) <= 1e-14);
  CHECK(std::abs(deriv.trace()) <= 1e-14);
}

TEST_CASE("vacuum is stationary") {
  const LindbladOracle oracle(ModelParams::resonant(1.0, 1.0, 0.7), 1, 2);
  ComplexMatrix vac = ComplexMatrix::Zero(6, 6);
  vac(oracle.index({1}, 0), oracle.index({1}, 0)) = 1.0;
  CHECK(oracle.rhs(vac).cwiseAbs().maxCoeff() <= 1e-15);

  std::vector<double> pops(6, 0.0);
  pops[static_cast<size_t>(oracle.index({1}, 0))] = 1.0;
  const auto traj = oracle.evolve(DensityMatrix::diagonal(pops), TimeGrid(0.0, 10.0, 11));
  for (const auto& rho : traj)
    CHECK(std::abs(rho(oracle.index({1}, 0), oracle.index({1}, 0)) - Complex(1.0, 0.0)) <= 1e-9);
}

TEST_CASE("evolved states keep unit trace") {
  const LindbladOracle oracle(ModelParams::resonant(1.0, 1.0), 1, 2);
  std::vector<double> pops(6, 0.0);
  pops[static_cast<size_t>(oracle.index({0}, 1))] = 1.0;
  const auto traj = oracle.evolve(DensityMatrix::diagonal(pops), TimeGrid(0.0, 20.0, 41));
  for (const auto& rho : traj)
    CHECK(std::abs(rho.matrix().trace() - Complex(1.0, 0.0)) <= 1e-9);
}

TEST_CASE("oracle reproduces the six-element sector equations") {
  const ModelParams p = ModelParams::resonant(1.0, 1.0, 0.7);
  const TimeGrid grid(0.0, 20.0, 81);
  const LindbladOracle oracle(p, 1, 2);
  std::vector<double> pops(6, 0.0);
  pops[static_cast<size_t>(oracle.index({0}, 1))] = 1.0;
  const auto full = oracle.evolve(DensityMatrix::diagonal(pops), grid);
  const auto sector = evolve_e1(p, grid);

  const int i_e1 = oracle.index({0}, 1);
  const int i_g2 = oracle.index({1}, 2);
  const int i_e0 = oracle.index({0}, 0);
  const int i_g1 = oracle.index({1}, 1);
  const int i_g0 = oracle.index({1}, 0);
  double max_diff = 0.0;
  for (size_t i = 0; i < full.size(); ++i) {
    const DensityMatrix& rho = full[i];
    const TwoExcDensity& d = sector[i];
    max_diff = std::max(max_diff, std::abs(rho(i_e1, i_e1).real() - d.r11));
    max_diff = std::max(max_diff, std::abs(rho(i_g2, i_g2).real() - d.r22));
    max_diff = std::max(max_diff, std::abs(rho(i_e0, i_e0).real() - d.r33));
    max_diff = std::max(max_diff, std::abs(rho(i_g1, i_g1).real() - d.r44));
    max_diff = std::max(max_diff, std::abs(rho(i_e1, i_g2) - d.r12));
    max_diff = std::max(max_diff, std::abs(rho(i_e0, i_g1) - d.r34));
    max_diff = std::max(max_diff, std::abs(rho(i_g0, i_g0).real() - d.r00));
  }
  CHECK(max_diff <= 1e-8);
}

TEST_CASE("truncation leakage is rejected and names the cutoff") {
  const LindbladOracle oracle(ModelParams::resonant(1.0, 1.0), 1, 2);
  std::vector<double> pops(6, 0.0);
  pops[static_cast<size_t>(oracle.index({0}, 2))] = 1.0;  // excited atom at the cutoff
  bool threw = false;
  try {
    oracle.evolve(DensityMatrix::diagonal(pops), TimeGrid(0.0, 1.0, 5));
  } catch (const std::invalid_argument& e) {
    threw = true;
    CHECK(std::string(e.what()).find("n_max") != std::string::npos);
  }
  CHECK(threw);
}

TEST_CASE("dimension mismatch on evolve is rejected") {
  const LindbladOracle oracle(ModelParams::resonant(1.0, 1.0), 1, 2);
  CHECK_THROWS_AS(oracle.evolve(DensityMatrix::diagonal({0.5, 0.5}), TimeGrid(0.0, 1.0, 3)),
                  std::invalid_argument);
}

TEST_CASE("partial trace over the mode") {
  SUBCASE("one atom") {
    const LindbladOracle oracle(ModelParams::resonant(1.0, 1.0), 1, 2);
    ComplexMatrix rho = ComplexMatrix::Zero(6, 6);
    rho(oracle.index({0}, 0), oracle.index({0}, 0)) = 0.3;
    rho(oracle.index({1}, 1), oracle.index({1}, 1)) = 0.7;
    const ComplexMatrix atoms = oracle.reduce_to_atoms(rho);
    CHECK(atoms.rows() == 2);
    CHECK(atoms(0, 0).real() == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(atoms(1, 1).real() == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(std::abs(atoms(0, 1)) == 0.0);
  }
  SUBCASE("coherence between equal photon numbers survives") {
    const LindbladOracle oracle(ModelParams::resonant(1.0, 1.0), 1, 2);
    ComplexMatrix rho = ComplexMatrix::Zero(6, 6);
    rho(oracle.index({0}, 1), oracle.index({0}, 1)) = 0.5;
    rho(oracle.index({1}, 1), oracle.index({1}, 1)) = 0.5;
    rho(oracle.index({0}, 1), oracle.index({1}, 1)) = Complex(0.1, 0.2);
    rho(oracle.index({1}, 1), oracle.index({0}, 1)) = Complex(0.1, -0.2);
    const ComplexMatrix atoms = oracle.reduce_to_atoms(rho);
    CHECK(std::abs(atoms(0, 1) - Complex(0.1, 0.2)) <= 1e-15);
  }
  SUBCASE("two atoms gives a 4x4 block") {
    const LindbladOracle oracle(ModelParams::resonant(1.0, 1.0), 2, 1);
    ComplexMatrix rho = ComplexMatrix::Zero(8, 8);
    rho(oracle.index({0, 1}, 0), oracle.index({0, 1}, 0)) = 0.25;
    rho(oracle.index({1, 0}, 0), oracle.index({1, 0}, 0)) = 0.25;
    rho(oracle.index({1, 1}, 1), oracle.index({1, 1}, 1)) = 0.5;
    const ComplexMatrix atoms = oracle.reduce_to_atoms(rho);
    CHECK(atoms.rows() == 4);
    CHECK(atoms(1, 1).real() == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(atoms(2, 2).real() == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(atoms(3, 3).real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(atoms.trace() - Complex(1.0, 0.0)) <= 1e-12);
  }
}
