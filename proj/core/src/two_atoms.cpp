#include "djc/two_atoms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "djc/ode.hpp"

namespace djc {

namespace {

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

}  // namespace

std::vector<TwoAtomState> evolve_two_atoms(const TwoAtomInit& init, const ModelParams& p,
                                           const TimeGrid& grid, double tol) {
  if (!p.is_resonant())
    throw std::invalid_argument("evolve_two_atoms: requires resonance");

  const double omega = p.omega();
  const double Omega = p.Omega;
  const double Gamma = p.Gamma;
  const double D = p.D;
  const OdeRhs rhs = [omega, Omega, Gamma, D](double, const ComplexVector& y) {
    ComplexVector dy(4);
    dy[0] = -imag_unit * (omega * y[0] + Omega * y[2] + D * y[1]);
    dy[1] = -imag_unit * (omega * y[1] + Omega * y[2] + D * y[0]);
    dy[2] = -imag_unit * (Complex(omega, -0.5 * Gamma) * y[2] + Omega * (y[0] + y[1]));
    dy[3] = Complex(Gamma * std::norm(y[2]), 0.0);
    return dy;
  };

  ComplexVector y0(4);
  y0 << init.C1(), init.C2(), init.C3(), Complex(0.0, 0.0);
  const std::vector<ComplexVector> traj = integrate_ode(rhs, y0, grid, tol);

  std::vector<TwoAtomState> out;
  out.reserve(traj.size());
  for (const ComplexVector& y : traj)
    out.push_back(TwoAtomState{y[0], y[1], y[2], clamp01(y[3].real())});
  return out;
}

double concurrence_pair(const TwoAtomState& state) {
  return 2.0 * std::abs(state.ct1 * state.ct2);
}

DensityMatrix reduced_two_atom_state(const TwoAtomState& state) {
  const double p1 = std::norm(state.ct1);
  const double p2 = std::norm(state.ct2);
  // All probability outside the two one-excitation atomic levels sits in
  // |gg>: the mode excitation |ct3|^2 plus the decayed weight lam. Using the
  // complement keeps the trace exactly 1.
  const double pgg = std::max(0.0, 1.0 - p1 - p2);
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(1, 1) = p1;
  m(2, 2) = p2;
  m(3, 3) = pgg;
  m(1, 2) = state.ct1 * std::conj(state.ct2);
  m(2, 1) = std::conj(m(1, 2));
  return DensityMatrix::from_matrix(m);
}

double wootters_concurrence(const DensityMatrix& rho) {
  if (rho.dim() != 4)
    throw std::invalid_argument("wootters_concurrence: expected a 4x4 two-qubit state");

  // sy (x) sy in the standard basis is real: antidiagonal (-1, 1, 1, -1).
  ComplexMatrix flip = ComplexMatrix::Zero(4, 4);
  flip(0, 3) = -1.0;
  flip(1, 2) = 1.0;
  flip(2, 1) = 1.0;
  flip(3, 0) = -1.0;

  // sqrt(rho), with eigenvalues below 1e-13 * lambda_max treated as an exact
  // kernel: they sit at eigensolver noise level, and rounding noise up
  // through the square root would otherwise contaminate the small singular
  // values below at the sqrt(noise) scale.
  const EigenSystem sys = hermitian_eigensystem(rho.matrix());
  const double cut = 1e-13 * std::max(sys.values.back(), 0.0);
  ComplexMatrix root = ComplexMatrix::Zero(4, 4);
  for (Eigen::Index k = 0; k < 4; ++k) {
    const double lam = sys.values[static_cast<size_t>(k)];
    if (lam <= cut) continue;
    root += std::sqrt(lam) * (sys.vectors.col(k) * sys.vectors.col(k).adjoint());
  }

  // The Wootters sqrt(lambda_i) are the singular values of
  //   A = sqrt(rho*) F sqrt(rho) = conj(sqrt(rho)) F sqrt(rho),
  // obtained here without squaring (which would cost half the significant
  // digits near zero) as the positive eigenvalues of the Hermitian embedding
  // [[0, A^dagger], [A, 0]], whose spectrum is the paired singular values.
  const ComplexMatrix a = root.conjugate() * flip * root;
  ComplexMatrix embed = ComplexMatrix::Zero(8, 8);
  embed.block(0, 4, 4, 4) = a.adjoint();
  embed.block(4, 0, 4, 4) = a;
  const std::vector<double> evals = hermitian_eigenvalues(embed);  // ascending

  double c = std::max(evals[7], 0.0);
  for (int k = 4; k < 7; ++k) c -= std::max(evals[static_cast<size_t>(k)], 0.0);
  return std::clamp(c, 0.0, 1.0);
}

double steady_concurrence(const TwoAtomInit& init) {
  return 0.5 * std::norm(init.C1() - init.C2());
}

}  // namespace djc
