#pragma once

#include <string>
#include <vector>

namespace djc {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;  // measured value vs threshold, or failure description
};

/// Runs the full invariant suite: integrator convergence, closed-form vs ODE
/// agreement, norm identities, interference antisymmetry, the six-equation
/// sector against the master-equation oracle (including the demonstration
/// that the rejected rho44 frequency term breaks trace conservation),
/// distance-bound properties, contraction, dark-state constancy, steady
/// concurrence, and the eigensolver/trace-distance axioms.
/// Deterministic; completes in a few seconds.
std::vector<CheckResult> run_selfcheck();

}  // namespace djc
