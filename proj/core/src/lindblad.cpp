#include "djc/lindblad.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "djc/ode.hpp"

namespace djc {

namespace {

ComplexMatrix mode_annihilation(int n_max) {
  ComplexMatrix b = ComplexMatrix::Zero(n_max + 1, n_max + 1);
  for (int n = 1; n <= n_max; ++n) b(n - 1, n) = std::sqrt(static_cast<double>(n));
  return b;
}

ComplexMatrix atom_lowering() {
  // Levels: 0 = |e>, 1 = |g>; sigma_minus = |g><e|.
  ComplexMatrix s = ComplexMatrix::Zero(2, 2);
  s(1, 0) = 1.0;
  return s;
}

}  // namespace

LindbladOracle::LindbladOracle(const ModelParams& p, int n_atoms, int n_max)
    : n_atoms_(n_atoms), n_max_(n_max), gamma_(p.Gamma) {
  if (n_atoms != 1 && n_atoms != 2)
    throw std::invalid_argument("LindbladOracle: n_atoms must be 1 or 2");
  if (n_max < 1) throw std::invalid_argument("LindbladOracle: n_max must be >= 1");

  const ComplexMatrix b = mode_annihilation(n_max);
  const ComplexMatrix id_mode = ComplexMatrix::Identity(n_max + 1, n_max + 1);
  const ComplexMatrix sm = atom_lowering();
  const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);

  if (n_atoms == 1) {
    lowering_ = kron(id2, b);
    const ComplexMatrix Sm = kron(sm, id_mode);
    const ComplexMatrix Sp = Sm.adjoint();
    hamiltonian_ = p.omega0 * (Sp * Sm) + p.omega_c * (lowering_.adjoint() * lowering_) +
                   p.Omega * (Sm * lowering_.adjoint() + Sp * lowering_);
  } else {
    lowering_ = kron(id2, kron(id2, b));
    const ComplexMatrix SmA = kron(sm, kron(id2, id_mode));
    const ComplexMatrix SmB = kron(id2, kron(sm, id_mode));
    const ComplexMatrix SpA = SmA.adjoint();
    const ComplexMatrix SpB = SmB.adjoint();
    hamiltonian_ = p.omega0 * (SpA * SmA + SpB * SmB) +
                   p.omega_c * (lowering_.adjoint() * lowering_) +
                   p.Omega * ((SmA + SmB) * lowering_.adjoint() + (SpA + SpB) * lowering_) +
                   p.D * (SpA * SmB + SmA * SpB);
  }
  number_ = lowering_.adjoint() * lowering_;

  // Diagonal entries whose population signals truncation leakage: any atom
  // excited while the mode already sits at the cutoff.
  const int n_levels = (n_atoms_ == 1) ? 2 : 4;
  for (int a = 0; a < n_levels; ++a) {
    const bool excited = (n_atoms_ == 1) ? (a == 0) : (a / 2 == 0 || a % 2 == 0);
    if (excited) leak_check_.push_back(a * (n_max_ + 1) + n_max_);
  }
}

int LindbladOracle::index(const std::vector<int>& atom_levels, int photons) const {
  if (static_cast<int>(atom_levels.size()) != n_atoms_)
    throw std::invalid_argument("LindbladOracle::index: expected " + std::to_string(n_atoms_) +
                                " atom levels");
  if (photons < 0 || photons > n_max_)
    throw std::invalid_argument("LindbladOracle::index: photon number out of range");
  int a = 0;
  for (int lvl : atom_levels) {
    if (lvl != 0 && lvl != 1)
      throw std::invalid_argument("LindbladOracle::index: atom level must be 0 or 1");
    a = a * 2 + lvl;
  }
  return a * (n_max_ + 1) + photons;
}

ComplexMatrix LindbladOracle::rhs(const ComplexMatrix& rho) const {
  return -imag_unit * (hamiltonian_ * rho - rho * hamiltonian_) -
         (0.5 * gamma_) * (number_ * rho - 2.0 * lowering_ * rho * lowering_.adjoint() +
                           rho * number_);
}

std::vector<DensityMatrix> LindbladOracle::evolve(const DensityMatrix& rho0, const TimeGrid& grid,
                                                  double tol) const {
  const int d = dim();
  if (rho0.dim() != d)
    throw std::invalid_argument("LindbladOracle::evolve: state dimension " +
                                std::to_string(rho0.dim()) + " does not match oracle dimension " +
                                std::to_string(d));

  const OdeRhs flat_rhs = [this, d](double, const ComplexVector& y) {
    const Eigen::Map<const ComplexMatrix> rho(y.data(), d, d);
    const ComplexMatrix drho = rhs(rho);
    ComplexVector dy(d * d);
    Eigen::Map<ComplexMatrix>(dy.data(), d, d) = drho;
    return dy;
  };

  ComplexVector y0(d * d);
  Eigen::Map<ComplexMatrix>(y0.data(), d, d) = rho0.matrix();
  const std::vector<ComplexVector> traj = integrate_ode(flat_rhs, y0, grid, tol);

  std::vector<DensityMatrix> out;
  out.reserve(traj.size());
  for (int i = 0; i < grid.n_points(); ++i) {
    const Eigen::Map<const ComplexMatrix> rho(traj[static_cast<size_t>(i)].data(), d, d);
    const double t = grid.time(i);

    double leakage = 0.0;
    for (int idx : leak_check_) leakage += rho(idx, idx).real();
    if (!(leakage <= 1e-9)) {
      std::ostringstream os;
      os << "LindbladOracle: photon cutoff n_max=" << n_max_ << " too small, leakage " << leakage
         << " at t=" << t;
      throw std::invalid_argument(os.str());
    }
    const double trace_defect = std::abs(rho.trace() - Complex(1.0, 0.0));
    if (!(trace_defect <= 1e-9))
      throw integration_error("LindbladOracle: trace drifted by " +
                                  std::to_string(trace_defect) + " at t=" + std::to_string(t),
                              t);
    out.push_back(DensityMatrix::from_matrix(rho));
  }
  return out;
}

ComplexMatrix LindbladOracle::reduce_to_atoms(const ComplexMatrix& rho) const {
  const int n_levels = (n_atoms_ == 1) ? 2 : 4;
  const int n_ph = n_max_ + 1;
  ComplexMatrix out = ComplexMatrix::Zero(n_levels, n_levels);
  for (int i = 0; i < n_levels; ++i)
    for (int j = 0; j < n_levels; ++j)
      for (int n = 0; n < n_ph; ++n) out(i, j) += rho(i * n_ph + n, j * n_ph + n);
  return out;
}

}  // namespace djc
