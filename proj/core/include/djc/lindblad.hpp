#pragma once

#include <vector>

#include "djc/linalg.hpp"
#include "djc/model.hpp"
#include "djc/time_grid.hpp"
#include "djc/types.hpp"

namespace djc {

/// Master-equation right-hand side assembled from explicit operator tensor
/// products on a photon-number-truncated basis. Deliberately shares no code
/// with the sector closed forms: it is the ground truth they are tested
/// against. Basis index = (atom levels, photon number), atoms ordered before
/// the mode, level 0 = excited; see index().
class LindbladOracle {
 public:
  /// n_atoms is 1 or 2; n_max >= 1 is the largest representable photon
  /// number. Two atoms share the mode coupling Omega and, if nonzero, the
  /// direct atom-atom coupling D.
  LindbladOracle(const ModelParams& p, int n_atoms, int n_max);

  int n_atoms() const { return n_atoms_; }
  int n_max() const { return n_max_; }
  int dim() const { return static_cast<int>(hamiltonian_.rows()); }

  const ComplexMatrix& hamiltonian() const { return hamiltonian_; }
  const ComplexMatrix& mode_lowering() const { return lowering_; }

  /// Flat basis index for |atom levels; n photons>, levels listed atom A
  /// first, each 0 (excited) or 1 (ground).
  int index(const std::vector<int>& atom_levels, int photons) const;

  /// -i[H, rho] - (Gamma/2)(b'b rho - 2 b rho b' + rho b'b)
  ComplexMatrix rhs(const ComplexMatrix& rho) const;

  /// Integrates rho(0) over the grid. Every reported state is validated
  /// (Hermitian, unit trace within 1e-9) and checked for truncation leakage:
  /// if any excited-atom population at photon number n_max exceeds 1e-9 the
  /// cutoff is too small and the run is rejected. An initial state already
  /// occupying those levels fails the same check at t = 0.
  std::vector<DensityMatrix> evolve(const DensityMatrix& rho0, const TimeGrid& grid,
                                    double tol = 1e-10) const;

  /// Partial trace over the mode: 2x2 for one atom, 4x4 for two.
  ComplexMatrix reduce_to_atoms(const ComplexMatrix& rho) const;

 private:
  int n_atoms_;
  int n_max_;
  double gamma_;
  ComplexMatrix hamiltonian_;
  ComplexMatrix lowering_;       // mode annihilation operator b
  ComplexMatrix number_;         // b'b
  std::vector<int> leak_check_;  // diagonal indices with an excited atom at n_max
};

}  // namespace djc
