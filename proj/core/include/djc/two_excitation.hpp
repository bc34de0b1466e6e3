#pragma once

#include <vector>

#include "djc/linalg.hpp"
#include "djc/model.hpp"
#include "djc/time_grid.hpp"
#include "djc/types.hpp"

namespace djc {

/// Matrix elements of the sector reachable from |e,1>, in the basis
/// |1> = |e,1>, |2> = |g,2>, |3> = |e,0>, |4> = |g,1>, |0> = |g,0>.
/// Only r12 and r34 can be nonzero off the diagonal.
struct TwoExcDensity {
  double r11, r22, r33, r44;  // populations
  Complex r12, r34;           // coherences within the coupled pairs
  double r00;                 // reconstructed as 1 - r11 - r22 - r33 - r44

  /// Reconstructs the 5x5 density matrix in the basis order {0,1,2,3,4}
  /// (validated: Hermitian, unit trace, positive within tolerance).
  DensityMatrix to_density_matrix() const;
};

/// Integrates the closed six-element system for the initial state |e,1><e,1|.
/// Detuning is permitted (the coherence equations carry omega0 - omega_c).
/// The population drained into |g,0> is integrated alongside as an audit
/// variable, but the reported r00 is the reconstruction 1 - sum(populations).
std::vector<TwoExcDensity> evolve_e1(const ModelParams& p, const TimeGrid& grid,
                                     double tol = 1e-10);

/// Trace audit |r00 + r11 + r22 + r33 + r44 - 1| per grid node, with r00 the
/// independently integrated drain population. With the standard equations the
/// defect stays at integrator accuracy. Setting `rho44_frequency_term` adds
/// the term -i omega_c r44 to the r44 equation: a frequency term acting on a
/// population, which makes it complex and visibly breaks trace conservation.
/// Kept as the rejected variant so the self-check can quantify the breakage.
std::vector<double> e1_trace_defect(const ModelParams& p, const TimeGrid& grid, double tol = 1e-10,
                                    bool rho44_frequency_term = false);

/// Excited-state population for the product initial state:
///   |b1|^2 p0 |mu|^2 + |b2|^2 p1 |nu|^2 + |b1|^2 p1 (r11 + r33)
/// where (p0, p1) are the mode weights and r11 + r33 is the excited-atom
/// occupation of the |e,1> sector. Requires resonance (uses mu, nu).
std::vector<double> excited_population_product_series(const ProductInit& prod,
                                                      const ModelParams& p, const TimeGrid& grid,
                                                      double tol = 1e-10);

/// Single-time convenience wrapper around the series form.
double excited_population_product(const ProductInit& prod, const ModelParams& p, double t,
                                  double tol = 1e-10);

}  // namespace djc
