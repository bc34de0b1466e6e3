#include "djc/information.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "djc/single_excitation.hpp"
#include "djc/two_excitation.hpp"

namespace djc {

double rescaled_population(double p_t, double p_0) {
  if (!(p_0 > 0.0))
    throw std::invalid_argument("rescaled_population: initial population must be > 0, got " +
                                std::to_string(p_0));
  return p_t / p_0;
}

double atomic_trace_distance(const PopulationPair& pair) {
  // Roundoff guard matching the density-matrix tolerances: populations a hair
  // outside [0, 1] are clamped, anything further out is a caller error.
  constexpr double kSlack = 1e-9;
  const double lo = -kSlack, hi = 1.0 + kSlack;
  if (!(pair.p_corr >= lo && pair.p_corr <= hi && pair.p_prod >= lo && pair.p_prod <= hi))
    throw std::invalid_argument("atomic_trace_distance: populations must lie in [0, 1]");
  const double a = std::clamp(pair.p_corr, 0.0, 1.0);
  const double b = std::clamp(pair.p_prod, 0.0, 1.0);
  return std::abs(a - b);
}

double initial_info_bound(Complex C1, Complex C2, const ProductInit& prod) {
  const double c1sq = std::norm(C1);
  const double c2sq = std::norm(C2);
  const double b1sq = std::norm(prod.b1());
  const double b2sq = std::norm(prod.b2());
  const double x = b2sq * c1sq;  // |B2 C1|^2
  const double y = b1sq * c2sq;  // |B1 C2|^2
  const double root = std::sqrt((x - y) * (x - y) + 4.0 * c1sq * c2sq);
  return 0.5 * (root + x + y) - std::abs(c2sq - b2sq);
}

double initial_info_bound(const CorrelatedInit& corr, const ProductInit& prod) {
  return initial_info_bound(corr.C1(), corr.C2(), prod);
}

TimeSeriesTable distance_series(const CorrelatedInit& corr, const ProductInit& prod,
                                const ModelParams& p, const TimeGrid& grid, double tol) {
  if (!p.is_resonant())
    throw std::invalid_argument("distance_series: requires resonance");

  const std::vector<double> p_prod = excited_population_product_series(prod, p, grid, tol);
  const int n = grid.n_points();

  std::vector<double> omega_t(static_cast<size_t>(n));
  std::vector<double> distance(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double t = grid.time(i);
    omega_t[static_cast<size_t>(i)] = p.Omega * t;
    const PopulationPair pair{excited_population(corr, p, t), p_prod[static_cast<size_t>(i)]};
    distance[static_cast<size_t>(i)] = atomic_trace_distance(pair);
  }

  const double d0 = distance.front();
  const double bound = initial_info_bound(corr, prod);
  std::vector<double> excess(static_cast<size_t>(n));
  std::vector<double> backflow(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    excess[static_cast<size_t>(i)] = distance[static_cast<size_t>(i)] - d0;
    backflow[static_cast<size_t>(i)] = (distance[static_cast<size_t>(i)] > d0 + 1e-9) ? 1.0 : 0.0;
  }

  TimeSeriesTable table("distance_series");
  table.add_column("omega_t", std::move(omega_t));
  table.add_column("distance", std::move(distance));
  table.add_column("distance_minus_d0", std::move(excess));
  table.add_column("bound_i", std::vector<double>(static_cast<size_t>(n), bound));
  table.add_column("bound_d0_plus_i", std::vector<double>(static_cast<size_t>(n), d0 + bound));
  table.add_column("backflow", std::move(backflow));
  return table;
}

}  // namespace djc
