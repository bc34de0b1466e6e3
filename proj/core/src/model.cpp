#include "djc/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace djc {

namespace {

constexpr double kNormTol = 1e-9;

double wrap_angle(double theta) {
  const double two_pi = 2.0 * std::numbers::pi;
  double w = std::fmod(theta, two_pi);
  if (w < 0.0) w += two_pi;
  return w;
}

void check_finite_nonneg(double x, const char* name) {
  if (!(x >= 0.0) || !std::isfinite(x))
    throw std::invalid_argument(std::string(name) + " must be finite and >= 0, got " +
                                std::to_string(x));
}

}  // namespace

ModelParams::ModelParams(double omega0_, double omega_c_, double Omega_, double Gamma_, double D_)
    : omega0(omega0_), omega_c(omega_c_), Omega(Omega_), Gamma(Gamma_), D(D_) {
  check_finite_nonneg(omega0, "ModelParams: omega0");
  check_finite_nonneg(omega_c, "ModelParams: omega_c");
  check_finite_nonneg(Gamma, "ModelParams: Gamma");
  if (!(Omega > 0.0) || !std::isfinite(Omega))
    throw std::invalid_argument("ModelParams: Omega must be finite and > 0, got " +
                                std::to_string(Omega));
  if (!std::isfinite(D))
    throw std::invalid_argument("ModelParams: D must be finite");
}

ModelParams ModelParams::resonant(double Omega_, double Gamma_, double omega, double D_) {
  return ModelParams(omega, omega, Omega_, Gamma_, D_);
}

double ModelParams::omega() const {
  if (!is_resonant())
    throw std::logic_error("ModelParams: omega() requires resonance, got omega0=" +
                           std::to_string(omega0) + ", omega_c=" + std::to_string(omega_c));
  return omega0;
}

CouplingRegime classify_regime(const ModelParams& p) {
  if (p.Gamma > 2.0 * p.Omega) return CouplingRegime::weak;
  if (p.Gamma < 2.0 * p.Omega) return CouplingRegime::strong;
  return CouplingRegime::boundary;
}

const char* to_string(CouplingRegime r) {
  switch (r) {
    case CouplingRegime::weak: return "weak";
    case CouplingRegime::strong: return "strong";
    case CouplingRegime::boundary: return "boundary";
  }
  return "?";
}

CorrelatedInit::CorrelatedInit(double c1, double c2, double theta)
    : c1_(c1), c2_(c2), theta_(wrap_angle(theta)) {
  check_finite_nonneg(c1, "CorrelatedInit: c1");
  check_finite_nonneg(c2, "CorrelatedInit: c2");
  const double defect = std::abs(c1 * c1 + c2 * c2 - 1.0);
  if (!(defect <= kNormTol))
    throw std::invalid_argument("CorrelatedInit: amplitudes not normalized, |c1^2+c2^2-1| = " +
                                std::to_string(defect));
}

CorrelatedInit CorrelatedInit::from_complex(Complex C1, Complex C2) {
  const double m1 = std::abs(C1);
  const double m2 = std::abs(C2);
  // Remove a global phase so that C1 becomes real nonnegative; if C1 = 0 the
  // global phase is fixed by making C2 real instead (theta = 0 by convention).
  double theta = 0.0;
  if (m1 > 0.0 && m2 > 0.0) theta = std::arg(C2) - std::arg(C1);
  return CorrelatedInit(m1, m2, theta);
}

Complex CorrelatedInit::C2() const { return std::polar(c2_, theta_); }

ProductInit::ProductInit(Complex b1, Complex b2, double mode_p0, double mode_p1)
    : b1_(b1), b2_(b2), mode_p0_(mode_p0), mode_p1_(mode_p1) {
  const double norm_defect = std::abs(std::norm(b1) + std::norm(b2) - 1.0);
  if (!(norm_defect <= kNormTol))
    throw std::invalid_argument("ProductInit: atom amplitudes not normalized, defect " +
                                std::to_string(norm_defect));
  check_finite_nonneg(mode_p0, "ProductInit: mode_p0");
  check_finite_nonneg(mode_p1, "ProductInit: mode_p1");
  const double weight_defect = std::abs(mode_p0 + mode_p1 - 1.0);
  if (!(weight_defect <= kNormTol))
    throw std::invalid_argument("ProductInit: mode weights do not sum to 1, defect " +
                                std::to_string(weight_defect));
}

TwoAtomInit::TwoAtomInit(double c1, double c2, double c3, double theta1, double theta2)
    : c1_(c1), c2_(c2), c3_(c3), theta1_(wrap_angle(theta1)), theta2_(wrap_angle(theta2)) {
  check_finite_nonneg(c1, "TwoAtomInit: c1");
  check_finite_nonneg(c2, "TwoAtomInit: c2");
  check_finite_nonneg(c3, "TwoAtomInit: c3");
  const double defect = std::abs(c1 * c1 + c2 * c2 + c3 * c3 - 1.0);
  if (!(defect <= kNormTol))
    throw std::invalid_argument("TwoAtomInit: amplitudes not normalized, defect " +
                                std::to_string(defect));
}

Complex TwoAtomInit::C2() const { return std::polar(c2_, theta1_); }
Complex TwoAtomInit::C3() const { return std::polar(c3_, theta2_); }

std::pair<DensityMatrix, DensityMatrix> marginals(const CorrelatedInit& init) {
  const double p_top = init.c1() * init.c1();
  const double p_bot = 1.0 - p_top;  // exact unit trace by construction
  DensityMatrix atom = DensityMatrix::diagonal({p_top, p_bot});
  DensityMatrix mode = DensityMatrix::diagonal({p_top, p_bot});
  return {atom, mode};
}

ProductInit product_from_marginals(const CorrelatedInit& init) {
  const double p_top = init.c1() * init.c1();
  return ProductInit(Complex(init.c1(), 0.0), Complex(init.c2(), 0.0), p_top, 1.0 - p_top);
}

}  // namespace djc
