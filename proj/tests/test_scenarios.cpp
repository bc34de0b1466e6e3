#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "djc/scenarios.hpp"
#include "djc/table.hpp"
#include "doctest.h"

using namespace djc;

namespace {

constexpr double kPi = std::numbers::pi;

double column_max(const TimeSeriesTable& table, const std::string& name) {
  const auto& col = table.column(name);
  return *std::max_element(col.begin(), col.end());
}

}  // namespace

TEST_CASE("catalog lists the nine figure scenarios in order") {
  const std::vector<Scenario> all = catalog();
  REQUIRE(all.size() == 9);
  const char* expected[] = {"fig1a", "fig1b", "fig1c", "fig1d", "fig2a",
                            "fig2b", "fig2c", "fig3a", "fig3b"};
  for (size_t i = 0; i < all.size(); ++i) CHECK(all[i].name == expected[i]);
}

TEST_CASE("catalog lookup") {
  CHECK(find_scenario("fig2b").has_value());
  CHECK(find_scenario("fig2b")->name == "fig2b");
  CHECK(!find_scenario("nosuch").has_value());
  CHECK(!find_scenario("FIG1A").has_value());
}

TEST_CASE("transfer scenario layout and metadata") {
  const TimeSeriesTable table = run_scenario(*find_scenario("fig1a"));
  const auto names = table.column_names();
  REQUIRE(names.size() == 7);
  CHECK(names[0] == "omega_t");
  CHECK(names[1] == "ptilde_corr_c1sq_0.1");
  CHECK(names[2] == "ptilde_corr_c1sq_0.5");
  CHECK(names[3] == "ptilde_corr_c1sq_0.9");
  CHECK(names[4] == "ptilde_prod_c1sq_0.1");
  CHECK(names[6] == "ptilde_prod_c1sq_0.9");
  CHECK(table.n_rows() == 1501);
  CHECK(table.column("omega_t").front() == 0.0);
  CHECK(table.column("omega_t").back() == doctest::Approx(15.0).epsilon(1e-12));

  bool saw_scenario = false, saw_model = false, saw_gamma = false;
  for (const auto& [key, value] : table.metadata()) {
    if (key == "scenario") { saw_scenario = true; CHECK(value == "fig1a"); }
    if (key == "model") { saw_model = true; CHECK(value == "one-atom"); }
    if (key == "run.c1sq_0.1.params") {
      saw_gamma = true;
      CHECK(value.find("Gamma=6") != std::string::npos);
    }
  }
  CHECK(saw_scenario);
  CHECK(saw_model);
  CHECK(saw_gamma);
}

TEST_CASE("weak-damping transfer peaks (frozen)") {
  const TimeSeriesTable table = run_scenario(*find_scenario("fig1a"));
  // Correlated start beats the product reference, and both exceed 1 for the
  // small atomic weight: excitation flows in from the mode.
  CHECK(column_max(table, "ptilde_corr_c1sq_0.1") == doctest::Approx(1.423072).epsilon(1e-5));
  CHECK(column_max(table, "ptilde_prod_c1sq_0.1") == doctest::Approx(1.304462).epsilon(1e-5));
  CHECK(column_max(table, "ptilde_corr_c1sq_0.1") > column_max(table, "ptilde_prod_c1sq_0.1"));
  // The large atomic weight never rises above its start.
  CHECK(column_max(table, "ptilde_corr_c1sq_0.9") <= 1.0 + 1e-9);
}

TEST_CASE("strong-coupling transfer peaks (frozen)") {
  const TimeSeriesTable table = run_scenario(*find_scenario("fig1b"));
  CHECK(column_max(table, "ptilde_corr_c1sq_0.1") == doctest::Approx(4.698697).epsilon(1e-5));
  CHECK(column_max(table, "ptilde_prod_c1sq_0.1") == doctest::Approx(4.135594).epsilon(1e-5));
  CHECK(column_max(table, "ptilde_corr_c1sq_0.1") > column_max(table, "ptilde_prod_c1sq_0.1"));
}

TEST_CASE("phase scenario: constructive amplifies; destructive caps only when overdamped") {
  SUBCASE("weak damping") {
    const TimeSeriesTable table = run_scenario(*find_scenario("fig1c"));
    CHECK(column_max(table, "ptilde_corr_c1sq_0.1_theta_0.5pi") ==
          doctest::Approx(2.837394).epsilon(1e-5));
    CHECK(column_max(table, "ptilde_corr_c1sq_0.5_theta_0.5pi") ==
          doctest::Approx(1.374666).epsilon(1e-5));
    CHECK(column_max(table, "ptilde_corr_c1sq_0.9_theta_0.5pi") ==
          doctest::Approx(1.068536).epsilon(1e-5));
    for (const char* combo : {"c1sq_0.1", "c1sq_0.5", "c1sq_0.9"}) {
      const std::string name = std::string("ptilde_corr_") + combo + "_theta_1.5pi";
      CHECK(column_max(table, name) <= 1.0 + 1e-9);
      CHECK(table.column(name).front() == 1.0);
    }
  }
  SUBCASE("strong coupling") {
    const TimeSeriesTable table = run_scenario(*find_scenario("fig1d"));
    CHECK(column_max(table, "ptilde_corr_c1sq_0.1_theta_0.5pi") ==
          doctest::Approx(6.761144).epsilon(1e-5));
    CHECK(column_max(table, "ptilde_corr_c1sq_0.5_theta_0.5pi") ==
          doctest::Approx(1.778827).epsilon(1e-5));
    CHECK(column_max(table, "ptilde_corr_c1sq_0.9_theta_0.5pi") ==
          doctest::Approx(1.100318).epsilon(1e-5));
    // No cap in the underdamped regime: mu nu* flips sign every half Rabi
    // cycle, so the phase that suppresses the first peak feeds later ones and
    // a small initial population can still be amplified. Frozen maxima:
    CHECK(column_max(table, "ptilde_corr_c1sq_0.1_theta_1.5pi") ==
          doctest::Approx(3.613129).epsilon(1e-5));
    CHECK(column_max(table, "ptilde_corr_c1sq_0.5_theta_1.5pi") ==
          doctest::Approx(1.0).epsilon(1e-5));
    CHECK(column_max(table, "ptilde_corr_c1sq_0.9_theta_1.5pi") ==
          doctest::Approx(1.0).epsilon(1e-5));
    for (const char* combo : {"c1sq_0.1", "c1sq_0.5", "c1sq_0.9"}) {
      CHECK(table.column(std::string("ptilde_corr_") + combo + "_theta_1.5pi").front() == 1.0);
    }
  }
}

TEST_CASE("distance scenarios (frozen maxima)") {
  SUBCASE("constructive phase") {
    const TimeSeriesTable table = run_scenario(*find_scenario("fig2a"));
    CHECK(column_max(table, "distance_gamma_0") == doctest::Approx(0.755098).epsilon(1e-5));
    CHECK(column_max(table, "distance_gamma_1") == doctest::Approx(0.613695).epsilon(1e-5));
    CHECK(column_max(table, "distance_gamma_6") == doctest::Approx(0.371964).epsilon(1e-5));
    // Undamped, the distance nearly attains the bound d0 + I = 37/49.
    CHECK(column_max(table, "distance_gamma_0") >= 0.74);
    CHECK(column_max(table, "distance_gamma_0") <= 37.0 / 49.0 + 1e-9);
    // Damping suppresses the revivals.
    CHECK(column_max(table, "distance_gamma_1") < column_max(table, "distance_gamma_0"));
    CHECK(column_max(table, "distance_gamma_6") < column_max(table, "distance_gamma_1"));
    // Bound columns are the shared constants.
    CHECK(std::abs(table.column("bound_i").front() - 30.0 / 49.0) <= 1e-12);
    CHECK(std::abs(table.column("bound_d0_plus_i").front() - 37.0 / 49.0) <= 1e-12);
  }
  SUBCASE("zero phase") {
    const TimeSeriesTable table = run_scenario(*find_scenario("fig2b"));
    CHECK(column_max(table, "distance_gamma_0") == doctest::Approx(0.326527).epsilon(1e-5));
    CHECK(column_max(table, "distance_gamma_1") == doctest::Approx(0.184342).epsilon(1e-5));
    CHECK(column_max(table, "distance_gamma_6") == doctest::Approx(0.147069).epsilon(1e-5));
    // Without the interference term the undamped maximum sits at 16/49.
    CHECK(std::abs(column_max(table, "distance_gamma_0") - 16.0 / 49.0) <= 1e-3);
  }
  SUBCASE("destructive phase") {
    const TimeSeriesTable table = run_scenario(*find_scenario("fig2c"));
    CHECK(column_max(table, "distance_gamma_0") == doctest::Approx(0.755096).epsilon(1e-5));
    CHECK(column_max(table, "distance_gamma_1") == doctest::Approx(0.245057).epsilon(1e-5));
    CHECK(column_max(table, "distance_gamma_6") == doctest::Approx(0.142857).epsilon(1e-5));
    // Strong damping never revives past the initial distance.
    const auto& flag = table.column("backflow_gamma_6");
    CHECK(*std::max_element(flag.begin(), flag.end()) == 0.0);
  }
}

TEST_CASE("distance excess respects the bound in every catalog run") {
  for (const char* name : {"fig2a", "fig2b", "fig2c"}) {
    const TimeSeriesTable table = run_scenario(*find_scenario(name));
    const double bound = table.column("bound_i").front();
    for (const char* run : {"gamma_0", "gamma_1", "gamma_6"}) {
      const auto& excess = table.column(std::string("distance_minus_d0_") + run);
      for (double e : excess) CHECK(e <= bound + 1e-9);
    }
  }
}

TEST_CASE("concurrence sweep scenarios") {
  SUBCASE("atomic-phase sweep") {
    const TimeSeriesTable table = run_scenario(*find_scenario("fig3b"));
    const auto names = table.column_names();
    REQUIRE(names.size() == 11);
    CHECK(names[0] == "omega_t");
    CHECK(names[1] == "concurrence_theta1_0");
    CHECK(names[5] == "concurrence_theta1_pi");
    CHECK(names[6] == "concurrence_steady_theta1_0");
    CHECK(names[10] == "concurrence_steady_theta1_pi");
    CHECK(table.n_rows() == 1501);

    const struct { const char* label; double value; } steady[] = {
        {"0", 0.0763932}, {"0.25pi", 0.1418861}, {"0.5pi", 0.3},
        {"0.75pi", 0.4581139}, {"pi", 0.5236068}};
    for (const auto& sv : steady) {
      const auto& col = table.column(std::string("concurrence_steady_theta1_") + sv.label);
      CHECK(col.front() == doctest::Approx(sv.value).epsilon(1e-5));
      CHECK(col.back() == col.front());
      // By the end of the window the trajectory has essentially converged.
      const auto& traj = table.column(std::string("concurrence_theta1_") + sv.label);
      CHECK(std::abs(traj.back() - sv.value) <= 1e-4);
    }
  }
  SUBCASE("mode-phase sweep leaves the steady value untouched") {
    const TimeSeriesTable table = run_scenario(*find_scenario("fig3a"));
    const double base = table.column("concurrence_steady_theta2_0").front();
    for (const char* label : {"0.25pi", "0.5pi", "0.75pi", "pi"}) {
      CHECK(table.column(std::string("concurrence_steady_theta2_") + label).front() ==
            doctest::Approx(base).epsilon(1e-12));
      CHECK(std::abs(table.column(std::string("concurrence_theta2_") + label).back() - base) <=
            1e-4);
    }
  }
}

TEST_CASE("unknown observables are rejected by name") {
  Scenario s = *find_scenario("fig1a");
  s.observables = {"no_such_series"};
  bool threw = false;
  try {
    run_scenario(s);
  } catch (const std::invalid_argument& e) {
    threw = true;
    CHECK(std::string(e.what()).find("no_such_series") != std::string::npos);
  }
  CHECK(threw);
}

TEST_CASE("runs must match the scenario model kind") {
  Scenario s = *find_scenario("fig1a");
  s.model = ModelKind::two_atom;
  CHECK_THROWS_AS(run_scenario(s), std::invalid_argument);
}

TEST_CASE("scenario without runs is rejected") {
  Scenario s;
  s.name = "empty";
  CHECK_THROWS_AS(run_scenario(s), std::invalid_argument);
}

TEST_CASE("repeated runs are bitwise deterministic") {
  std::ostringstream first, second;
  write_csv(run_scenario(*find_scenario("fig3b")), first);
  write_csv(run_scenario(*find_scenario("fig3b")), second);
  CHECK(first.str() == second.str());
  CHECK(first.str().rfind("omega_t,concurrence_theta1_0,", 0) == 0);
}
