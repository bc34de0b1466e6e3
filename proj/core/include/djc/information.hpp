#pragma once

#include "djc/model.hpp"
#include "djc/table.hpp"
#include "djc/time_grid.hpp"
#include "djc/types.hpp"

namespace djc {

/// Excited-state populations of the atom under the correlated (p_corr) and
/// product (p_prod) initial conditions at one time.
struct PopulationPair {
  double p_corr;
  double p_prod;
};

/// Population rescaled by its initial value, p_t / p_0. Values above 1 signal
/// excitation transfer beyond what the initial atomic weight alone allows.
/// Rejects p_0 <= 0 (the rescaling is undefined for a vanishing start).
double rescaled_population(double p_t, double p_0);

/// Trace distance between the two reduced atom states. Both are diagonal in
/// {|e>, |g>}, so this is just |p_corr - p_prod|; validates both populations
/// lie in [0, 1].
double atomic_trace_distance(const PopulationPair& pair);

/// Initial-information bound
///   I = 1/2 (sqrt((|B2 C1|^2 - |B1 C2|^2)^2 + 4 |C1|^2 |C2|^2)
///            + |B2 C1|^2 + |B1 C2|^2) - ||C2|^2 - |B2|^2|
/// with (C1, C2) the correlated amplitudes and (B1, B2) the product atom
/// amplitudes. Depends only on moduli, never on the relative phase.
double initial_info_bound(Complex C1, Complex C2, const ProductInit& prod);
double initial_info_bound(const CorrelatedInit& corr, const ProductInit& prod);

/// Distance-versus-time table:
///   omega_t, distance, distance_minus_d0, bound_i, bound_d0_plus_i, backflow
/// distance is computed per node from the two population series; bound_i and
/// bound_d0_plus_i are constant columns (the inequality's right-hand side in
/// both common readings); backflow is 1 where distance > distance(0) + 1e-9.
/// Requires resonance.
TimeSeriesTable distance_series(const CorrelatedInit& corr, const ProductInit& prod,
                                const ModelParams& p, const TimeGrid& grid, double tol = 1e-10);

}  // namespace djc
