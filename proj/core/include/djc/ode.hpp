#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "djc/time_grid.hpp"
#include "djc/types.hpp"

namespace djc {

/// Right-hand side f(t, y) of y' = f(t, y) over complex state vectors.
using OdeRhs = std::function<ComplexVector(double, const ComplexVector&)>;

/// Thrown when an integration cannot continue (step-size underflow, non-finite
/// state, step budget exhausted). Records how far the integration got.
class integration_error : public std::runtime_error {
 public:
  integration_error(const std::string& what, double time_reached)
      : std::runtime_error(what), time_reached_(time_reached) {}

  double time_reached() const { return time_reached_; }

 private:
  double time_reached_;
};

/// Adaptive Dormand-Prince 5(4) with dense output at the grid nodes.
/// `tol` is used for both the absolute and relative error weights. The step
/// controller is deterministic: identical inputs give bitwise-identical output.
std::vector<ComplexVector> integrate_ode(const OdeRhs& rhs, const ComplexVector& y0,
                                         const TimeGrid& grid, double tol = 1e-10);

/// Fixed-step classical RK4 cross-check: `substeps` equal steps per grid
/// interval, states reported exactly at the nodes. No error control.
std::vector<ComplexVector> integrate_ode_rk4(const OdeRhs& rhs, const ComplexVector& y0,
                                             const TimeGrid& grid, int substeps = 16);

}  // namespace djc
