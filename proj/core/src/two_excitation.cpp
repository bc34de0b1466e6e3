#include "djc/two_excitation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "djc/ode.hpp"
#include "djc/single_excitation.hpp"

namespace djc {

namespace {

// State layout: (r11, r12, r22, r33, r34, r44, r00_audit).
enum { kR11, kR12, kR22, kR33, kR34, kR44, kR00, kDim };

OdeRhs make_e1_rhs(const ModelParams& p, bool rho44_frequency_term) {
  const double Omega = p.Omega;
  const double Gamma = p.Gamma;
  const double detuning = p.omega0 - p.omega_c;
  const double omega_c = p.omega_c;
  const double s2 = std::sqrt(2.0);
  return [=](double, const ComplexVector& y) {
    ComplexVector dy(kDim);
    const Complex r12 = y[kR12];
    const Complex r21 = std::conj(r12);
    const Complex r34 = y[kR34];
    const Complex r43 = std::conj(r34);
    dy[kR11] = -imag_unit * s2 * Omega * (r21 - r12) - Gamma * y[kR11];
    dy[kR12] = -imag_unit * detuning * r12 - imag_unit * s2 * Omega * (y[kR22] - y[kR11]) -
               1.5 * Gamma * r12;
    dy[kR22] = -imag_unit * s2 * Omega * (r12 - r21) - 2.0 * Gamma * y[kR22];
    dy[kR33] = -imag_unit * Omega * (r43 - r34) + Gamma * y[kR11];
    dy[kR34] = -imag_unit * detuning * r34 - imag_unit * Omega * (y[kR44] - y[kR33]) -
               0.5 * Gamma * r34 + s2 * Gamma * r12;
    dy[kR44] = -imag_unit * Omega * (r34 - r43) - Gamma * y[kR44] + 2.0 * Gamma * y[kR22];
    if (rho44_frequency_term) dy[kR44] -= imag_unit * omega_c * y[kR44];
    dy[kR00] = Gamma * y[kR44];
    return dy;
  };
}

ComplexVector e1_initial() {
  ComplexVector y0 = ComplexVector::Zero(kDim);
  y0[kR11] = 1.0;
  return y0;
}

}  // namespace

DensityMatrix TwoExcDensity::to_density_matrix() const {
  ComplexMatrix m = ComplexMatrix::Zero(5, 5);
  m(0, 0) = r00;
  m(1, 1) = r11;
  m(2, 2) = r22;
  m(3, 3) = r33;
  m(4, 4) = r44;
  m(1, 2) = r12;
  m(2, 1) = std::conj(r12);
  m(3, 4) = r34;
  m(4, 3) = std::conj(r34);
  return DensityMatrix::from_matrix(m);
}

std::vector<TwoExcDensity> evolve_e1(const ModelParams& p, const TimeGrid& grid, double tol) {
  const std::vector<ComplexVector> traj =
      integrate_ode(make_e1_rhs(p, false), e1_initial(), grid, tol);
  std::vector<TwoExcDensity> out;
  out.reserve(traj.size());
  for (const ComplexVector& y : traj) {
    TwoExcDensity d;
    d.r11 = y[kR11].real();
    d.r22 = y[kR22].real();
    d.r33 = y[kR33].real();
    d.r44 = y[kR44].real();
    d.r12 = y[kR12];
    d.r34 = y[kR34];
    d.r00 = 1.0 - d.r11 - d.r22 - d.r33 - d.r44;
    out.push_back(d);
  }
  return out;
}

std::vector<double> e1_trace_defect(const ModelParams& p, const TimeGrid& grid, double tol,
                                    bool rho44_frequency_term) {
  const std::vector<ComplexVector> traj =
      integrate_ode(make_e1_rhs(p, rho44_frequency_term), e1_initial(), grid, tol);
  std::vector<double> out;
  out.reserve(traj.size());
  for (const ComplexVector& y : traj) {
    const Complex trace = y[kR00] + y[kR11] + y[kR22] + y[kR33] + y[kR44];
    out.push_back(std::abs(trace - Complex(1.0, 0.0)));
  }
  return out;
}

std::vector<double> excited_population_product_series(const ProductInit& prod,
                                                      const ModelParams& p, const TimeGrid& grid,
                                                      double tol) {
  if (!p.is_resonant())
    throw std::invalid_argument("excited_population_product_series: requires resonance");
  const double b1sq = std::norm(prod.b1());
  const double b2sq = std::norm(prod.b2());
  const double p0 = prod.mode_p0();
  const double p1 = prod.mode_p1();

  const std::vector<TwoExcDensity> sector = evolve_e1(p, grid, tol);
  std::vector<double> out;
  out.reserve(sector.size());
  for (int i = 0; i < grid.n_points(); ++i) {
    const Propagator prop = propagator(p, grid.time(i));
    const TwoExcDensity& d = sector[static_cast<size_t>(i)];
    const double value = b1sq * p0 * std::norm(prop.mu) + b2sq * p1 * std::norm(prop.nu) +
                         b1sq * p1 * (d.r11 + d.r33);
    out.push_back(std::clamp(value, 0.0, 1.0));
  }
  return out;
}

double excited_population_product(const ProductInit& prod, const ModelParams& p, double t,
                                  double tol) {
  if (!p.is_resonant())
    throw std::invalid_argument("excited_population_product: requires resonance");
  if (t == 0.0) return std::norm(prod.b1());
  const TimeGrid grid(0.0, t, 2);
  return excited_population_product_series(prod, p, grid, tol).back();
}

}  // namespace djc
