#pragma once

#include <utility>

#include "djc/linalg.hpp"
#include "djc/types.hpp"

namespace djc {

/// Frequencies and rates of the damped atom-mode model, all in units of a
/// common reference frequency. Immutable after construction.
struct ModelParams {
  double omega0;   // atomic transition frequency (>= 0)
  double omega_c;  // mode frequency (>= 0)
  double Omega;    // atom-mode coupling (> 0)
  double Gamma;    // mode damping rate (>= 0)
  double D;        // direct atom-atom coupling, two-atom model only

  ModelParams(double omega0_, double omega_c_, double Omega_, double Gamma_, double D_ = 0.0);

  /// Resonant parameter set omega0 = omega_c = omega.
  static ModelParams resonant(double Omega_, double Gamma_, double omega = 0.0, double D_ = 0.0);

  bool is_resonant() const { return omega0 == omega_c; }
  /// Common frequency on resonance; throws off resonance.
  double omega() const;
};

enum class CouplingRegime { weak, strong, boundary };

/// Weak coupling means Gamma > 2 * Omega, strong means Gamma < 2 * Omega,
/// boundary the equality case. Note this labeling convention is independent of
/// the propagator's oscillatory/overdamped branch point at Gamma = 4 * Omega;
/// the propagator code never branches on the regime label.
CouplingRegime classify_regime(const ModelParams& p);
const char* to_string(CouplingRegime r);

/// Correlated atom-mode initial state c1 |e,0> + c2 e^{i theta} |g,1>, with
/// real amplitudes c1, c2 >= 0 and the relative phase split off explicitly.
class CorrelatedInit {
 public:
  /// Requires c1, c2 >= 0 and c1^2 + c2^2 = 1 within 1e-9. theta is stored
  /// wrapped into [0, 2 pi).
  CorrelatedInit(double c1, double c2, double theta);

  /// Amplitude/phase decomposition of arbitrary complex amplitudes. The global
  /// phase is chosen so that the |e,0> amplitude comes out real and >= 0.
  static CorrelatedInit from_complex(Complex C1, Complex C2);

  double c1() const { return c1_; }
  double c2() const { return c2_; }
  double theta() const { return theta_; }
  Complex C1() const { return Complex(c1_, 0.0); }
  Complex C2() const;

 private:
  double c1_, c2_, theta_;
};

/// Product atom-mode initial state (b1 |e> + b2 |g>) (x) rho_mode with the
/// mode diagonal in the number basis: weights (mode_p0, mode_p1).
class ProductInit {
 public:
  /// Requires |b1|^2 + |b2|^2 = 1 and mode_p0 + mode_p1 = 1, both within 1e-9,
  /// weights nonnegative.
  ProductInit(Complex b1, Complex b2, double mode_p0, double mode_p1);

  Complex b1() const { return b1_; }
  Complex b2() const { return b2_; }
  double mode_p0() const { return mode_p0_; }
  double mode_p1() const { return mode_p1_; }

 private:
  Complex b1_, b2_;
  double mode_p0_, mode_p1_;
};

/// Two atoms sharing one damped mode, single joint excitation:
/// c1 |e,g,0> + c2 e^{i theta1} |g,e,0> + c3 e^{i theta2} |g,g,1>.
/// theta1 is the relative phase between the atomic amplitudes, theta2 the
/// phase of the mode amplitude.
class TwoAtomInit {
 public:
  /// Requires c1, c2, c3 >= 0 and unit norm within 1e-9; phases wrapped into
  /// [0, 2 pi).
  TwoAtomInit(double c1, double c2, double c3, double theta1, double theta2);

  double c1() const { return c1_; }
  double c2() const { return c2_; }
  double c3() const { return c3_; }
  double theta1() const { return theta1_; }
  double theta2() const { return theta2_; }
  Complex C1() const { return Complex(c1_, 0.0); }
  Complex C2() const;
  Complex C3() const;

 private:
  double c1_, c2_, c3_, theta1_, theta2_;
};

/// Reduced (atom, mode) states of the correlated state. Both are diagonal and
/// independent of theta: diag(c1^2, c2^2) for the atom in the {|e>, |g>}
/// basis, diag(c1^2, c2^2) for the mode in the {|0>, |1>} basis.
std::pair<DensityMatrix, DensityMatrix> marginals(const CorrelatedInit& init);

/// Product reference state built from the correlated state's amplitude moduli:
/// pure atom part c1 |e> + c2 |g> (real amplitudes), mode weights (c1^2, c2^2).
ProductInit product_from_marginals(const CorrelatedInit& init);

}  // namespace djc
