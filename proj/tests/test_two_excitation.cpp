#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "djc/model.hpp"
#include "djc/single_excitation.hpp"
#include "djc/two_excitation.hpp"
#include "djc/time_grid.hpp"
#include "doctest.h"

using namespace djc;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kRoot2 = std::numbers::sqrt2;
}

TEST_CASE("doubly excited sector starts in |e,1>") {
  const auto traj = evolve_e1(ModelParams::resonant(1.0, 6.0), TimeGrid(0.0, 1.0, 11));
  CHECK(traj[0].r11 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(traj[0].r22 == 0.0);
  CHECK(traj[0].r33 == 0.0);
  CHECK(traj[0].r44 == 0.0);
  CHECK(std::abs(traj[0].r12) == 0.0);
  CHECK(std::abs(traj[0].r34) == 0.0);
}

TEST_CASE("lossless two-excitation Rabi oscillation at sqrt(2) Omega") {
  // Without damping the pair (|e,1>, |g,2>) is a closed two-level system with
  // coupling sqrt(2) Omega; the lower sector never populates.
  const ModelParams p = ModelParams::resonant(1.0, 0.0);
  const TimeGrid grid(0.0, 2.0 * kPi, 201);
  const auto traj = evolve_e1(p, grid);
  for (int i = 0; i < grid.n_points(); ++i) {
    const double ph = kRoot2 * grid.time(i);
    const double c = std::cos(ph);
    const double s = std::sin(ph);
    CHECK(std::abs(traj[i].r11 - c * c) <= 1e-8);
    CHECK(std::abs(traj[i].r22 - s * s) <= 1e-8);
    CHECK(std::abs(traj[i].r33) <= 1e-10);
    CHECK(std::abs(traj[i].r44) <= 1e-10);
  }
}

TEST_CASE("strong damping drains the doubly excited sector") {
  const ModelParams p = ModelParams::resonant(1.0, 6.0);
  const TimeGrid grid(0.0, 50.0, 501);
  const auto traj = evolve_e1(p, grid);
  const TwoExcDensity& last = traj.back();
  CHECK(last.r11 <= 1e-6);
  CHECK(last.r22 <= 1e-6);
  CHECK(last.r33 <= 1e-6);
  CHECK(last.r44 <= 1e-6);
  CHECK(std::abs(last.r12) <= 1e-6);
  CHECK(std::abs(last.r34) <= 1e-6);
  CHECK(last.r00 == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("trace audit stays at integrator accuracy") {
  for (double Gamma : {0.0, 1.0, 6.0}) {
    const auto defect = e1_trace_defect(ModelParams::resonant(1.0, Gamma), TimeGrid(0.0, 20.0, 201));
    CHECK(*std::max_element(defect.begin(), defect.end()) <= 1e-9);
  }
}

TEST_CASE("frequency term on the r44 population visibly breaks the trace") {
  // The rejected equation variant adds -i omega_c r44 to a population equation;
  // with omega_c = 1 the trace defect grows far beyond integrator error.
  const ModelParams p(1.0, 1.0, 1.0, 1.0);
  const auto defect = e1_trace_defect(p, TimeGrid(0.0, 5.0, 101), 1e-10, true);
  CHECK(*std::max_element(defect.begin(), defect.end()) > 1e-3);
  // And the standard equations on the identical parameter set do not.
  const auto ok = e1_trace_defect(p, TimeGrid(0.0, 5.0, 101));
  CHECK(*std::max_element(ok.begin(), ok.end()) <= 1e-9);
}

TEST_CASE("populations stay essentially nonnegative and coherences bounded") {
  for (double Gamma : {1.0, 6.0}) {
    const auto traj = evolve_e1(ModelParams::resonant(1.0, Gamma), TimeGrid(0.0, 20.0, 401));
    for (const auto& s : traj) {
      for (double pop : {s.r11, s.r22, s.r33, s.r44}) CHECK(pop >= -1e-8);
      // Cauchy-Schwarz within each coupled pair. The upper pair saturates the
      // bound exactly (nothing feeds back into it, so its 2x2 block stays an
      // unnormalized projector); the slack only absorbs integrator noise.
      CHECK(std::norm(s.r12) <= s.r11 * s.r22 + 1e-8);
      CHECK(std::norm(s.r34) <= s.r33 * s.r44 + 1e-8);
    }
  }
}

TEST_CASE("five-level density matrix reconstruction validates") {
  const auto traj = evolve_e1(ModelParams::resonant(1.0, 1.0), TimeGrid(0.0, 10.0, 21));
  for (const auto& s : traj) {
    const DensityMatrix rho = s.to_density_matrix();
    CHECK(rho.dim() == 5);
    CHECK(std::abs(rho.matrix().trace() - Complex(1.0, 0.0)) <= 1e-12);
    CHECK(rho(1, 2) == s.r12);
    CHECK(rho(3, 4) == s.r34);
  }
}

TEST_CASE("product-state population series") {
  SUBCASE("starts at the atomic weight") {
    const ProductInit prod(Complex(std::sqrt(0.3), 0.0), Complex(std::sqrt(0.7), 0.0), 0.4, 0.6);
    const auto series =
        excited_population_product_series(prod, ModelParams::resonant(1.0, 6.0), TimeGrid(0.0, 1.0, 11));
    CHECK(series[0] == doctest::Approx(0.3).epsilon(1e-9));
  }
  SUBCASE("empty mode reduces to the one-excitation result") {
    const ProductInit prod(Complex(std::sqrt(0.3), 0.0), Complex(std::sqrt(0.7), 0.0), 1.0, 0.0);
    const ModelParams p = ModelParams::resonant(1.0, 6.0);
    const TimeGrid grid(0.0, 10.0, 101);
    const auto series = excited_population_product_series(prod, p, grid);
    for (int i = 0; i < grid.n_points(); ++i) {
      const Propagator pr = propagator(p, grid.time(i));
      CHECK(std::abs(series[i] - 0.3 * std::norm(pr.mu)) <= 1e-10);
    }
  }
  SUBCASE("single-time wrapper matches the series") {
    const ProductInit prod(Complex(std::sqrt(0.5), 0.0), Complex(std::sqrt(0.5), 0.0), 0.5, 0.5);
    const ModelParams p = ModelParams::resonant(1.0, 1.0);
    const TimeGrid grid(0.0, 6.0, 7);
    const auto series = excited_population_product_series(prod, p, grid);
    for (int i = 0; i < grid.n_points(); ++i)
      CHECK(excited_population_product(prod, p, grid.time(i)) ==
            doctest::Approx(series[i]).epsilon(1e-9));
  }
  SUBCASE("values stay in [0, 1]") {
    const ProductInit prod(Complex(std::sqrt(0.1), 0.0), Complex(std::sqrt(0.9), 0.0), 0.1, 0.9);
    for (double Gamma : {0.0, 6.0}) {
      const auto series = excited_population_product_series(prod, ModelParams::resonant(1.0, Gamma),
                                                            TimeGrid(0.0, 20.0, 801));
      for (double v : series) {
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
      }
    }
  }
}
