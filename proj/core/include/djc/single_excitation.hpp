#pragma once

#include <vector>

#include "djc/linalg.hpp"
#include "djc/model.hpp"
#include "djc/time_grid.hpp"
#include "djc/types.hpp"

namespace djc {

/// One-excitation sector state: unnormalized pure-branch amplitudes of |e,0>
/// and |g,1> plus the accumulated ground-state weight lam.
struct SingleExcState {
  Complex ct1;  // amplitude on |e,0>
  Complex ct2;  // amplitude on |g,1>
  double lam;   // ground-state weight, in [0,1]
};

/// Closed-form propagator amplitudes of the one-excitation sector on
/// resonance. The pair (ct1, ct2) evolves as
///   ct1(t) = mu(t) ct1(0) - i nu(t) ct2(0)
///   ct2(t) = -i nu(t) ct1(0) + mu_bar(t) ct2(0)
struct Propagator {
  Complex mu;
  Complex nu;
  Complex mu_bar;
  Complex a_param;  // a = sqrt((Gamma/2)^2 - 4 Omega^2), principal complex root
};

/// Evaluates mu, nu (and the companion mu_bar) at time t >= 0.
///
/// a is taken as a complex square root, so the overdamped (a real) and
/// oscillatory (a imaginary, cosh -> cos) regimes share one code path; for
/// |a t| < 1e-4 the ratio sinh(a t/2)/a is replaced by its series to avoid
/// the removable singularity at Gamma = 4 Omega.
/// Requires resonance; throws std::invalid_argument otherwise.
Propagator propagator(const ModelParams& p, double t);

enum class EvolveMethod { closed_form, ode };

/// Trajectory of the one-excitation sector from a correlated initial state.
/// The closed-form path evaluates the propagator per node; the ODE path
/// integrates the amplitude equations with lam carried in the state vector
/// (quadrature of Gamma |ct2|^2). Both require resonance and agree to 1e-8.
std::vector<SingleExcState> evolve(const CorrelatedInit& init, const ModelParams& p,
                                   const TimeGrid& grid,
                                   EvolveMethod method = EvolveMethod::closed_form,
                                   double tol = 1e-10);

/// The three addends of the excited-state population: direct transfer from
/// the atomic amplitude, transfer from the mode amplitude, and the
/// phase-controlled interference cross term.
struct PopulationTerms {
  double from_atom;     // |mu|^2 c1^2
  double from_mode;     // |nu|^2 c2^2
  double interference;  // 2 mu nu* c1 c2 sin(theta); mu nu* is real on resonance
  double total() const { return from_atom + from_mode + interference; }
};

PopulationTerms excited_population_terms(const CorrelatedInit& init, const ModelParams& p,
                                         double t);

/// |C_e(t)|^2 for the correlated initial state (sum of the three addends).
double excited_population(const CorrelatedInit& init, const ModelParams& p, double t);

/// Reduced atom state diag(|ct1|^2, 1 - |ct1|^2) in the {|e>, |g>} basis.
DensityMatrix reduced_atom_state(const SingleExcState& state);

}  // namespace djc
