#pragma once

#include <vector>

#include "djc/linalg.hpp"
#include "djc/model.hpp"
#include "djc/time_grid.hpp"
#include "djc/types.hpp"

namespace djc {

/// One shared excitation between two atoms and the damped mode: amplitudes of
/// |e,g,0>, |g,e,0>, |g,g,1> plus the accumulated ground weight.
struct TwoAtomState {
  Complex ct1;
  Complex ct2;
  Complex ct3;
  double lam;
};

/// Integrates the three-amplitude system
///   i ct1' = omega ct1 + Omega ct3 + D ct2
///   i ct2' = omega ct2 + Omega ct3 + D ct1
///   i ct3' = (omega - i Gamma/2) ct3 + Omega (ct1 + ct2)
/// with lam carried as the quadrature of Gamma |ct3|^2. Requires resonance.
/// For D = 0 the antisymmetric combination (ct1 - ct2)/sqrt(2) decouples from
/// the mode and keeps constant modulus — the dark state behind the steady
/// entanglement.
std::vector<TwoAtomState> evolve_two_atoms(const TwoAtomInit& init, const ModelParams& p,
                                           const TimeGrid& grid, double tol = 1e-10);

/// Concurrence of the atom pair in the one-excitation ansatz: 2 |ct1 ct2|.
double concurrence_pair(const TwoAtomState& state);

/// Reduced two-atom density matrix assembled analytically from the ansatz in
/// the basis {|ee>, |eg>, |ge>, |gg>}: an X-shaped matrix with populations
/// (0, |ct1|^2, |ct2|^2, lam + |ct3|^2) and one coherence ct1 ct2*.
DensityMatrix reduced_two_atom_state(const TwoAtomState& state);

/// Wootters concurrence of an arbitrary two-qubit state:
/// max{0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)} with l_i the descending
/// eigenvalues of rho (sy x sy) rho* (sy x sy), conjugation in the standard
/// basis. The sqrt(l_i) are evaluated directly as the singular values of
/// sqrt(rho*) (sy x sy) sqrt(rho) via a Hermitian block embedding, never
/// through l_i itself — squaring would halve the attainable accuracy of the
/// small roots.
double wootters_concurrence(const DensityMatrix& rho);

/// Long-time concurrence |C1(0) - C2(0)|^2 / 2 (C2 carries the phase theta1):
/// the squared modulus of the surviving dark-state amplitude, times two for
/// the concurrence normalization. Independent of theta2 and of D; meaningful
/// for Gamma > 0 where the bright sector fully decays.
double steady_concurrence(const TwoAtomInit& init);

}  // namespace djc
