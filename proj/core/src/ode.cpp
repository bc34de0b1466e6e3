#include "djc/ode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

namespace djc {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0,
                 a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                 a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
constexpr double a71 = 35.0 / 384.0, a73 = 500.0 / 1113.0, a74 = 125.0 / 192.0,
                 a75 = -2187.0 / 6784.0, a76 = 11.0 / 84.0;
// Difference between the 5th- and the embedded 4th-order weights.
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                 e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;
// Dense-output weights for the quartic interpolant.
constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                 d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                 d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;

constexpr double kSafety = 0.9;
constexpr double kShrinkLimit = 0.2;
constexpr double kGrowLimit = 5.0;
constexpr long kMaxSteps = 20000000;

std::string at_time(double t) {
  std::ostringstream os;
  os.precision(12);
  os << "t=" << t;
  return os.str();
}

double error_norm(const ComplexVector& scaled_err, const ComplexVector& y_old,
                  const ComplexVector& y_new, double tol) {
  double acc = 0.0;
  for (Eigen::Index i = 0; i < scaled_err.size(); ++i) {
    const double sk = tol + tol * std::max(std::abs(y_old[i]), std::abs(y_new[i]));
    const double e = std::abs(scaled_err[i]) / sk;
    acc += e * e;
  }
  return std::sqrt(acc / static_cast<double>(scaled_err.size()));
}

double rms_scaled(const ComplexVector& v, const ComplexVector& ref, double tol) {
  double acc = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double sk = tol + tol * std::abs(ref[i]);
    const double e = std::abs(v[i]) / sk;
    acc += e * e;
  }
  return std::sqrt(acc / static_cast<double>(v.size()));
}

// Standard starting-step heuristic: probe the scale of y' and y'' once.
double initial_step(const OdeRhs& rhs, double t0, const ComplexVector& y0,
                    const ComplexVector& f0, double span, double tol) {
  const double d0 = rms_scaled(y0, y0, tol);
  const double d1n = rms_scaled(f0, y0, tol);
  double h0 = (d0 < 1e-5 || d1n < 1e-5) ? 1e-6 : 0.01 * (d0 / d1n);
  h0 = std::min(h0, span);
  const ComplexVector y1 = y0 + h0 * f0;
  const ComplexVector f1 = rhs(t0 + h0, y1);
  const double d2 = rms_scaled(f1 - f0, y0, tol) / h0;
  const double der = std::max(d1n, d2);
  double h1 = (der <= 1e-15) ? std::max(1e-6, h0 * 1e-3) : std::pow(0.01 / der, 0.2);
  return std::min({100.0 * h0, h1, span});
}

}  // namespace

std::vector<ComplexVector> integrate_ode(const OdeRhs& rhs, const ComplexVector& y0,
                                         const TimeGrid& grid, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("integrate_ode: tol must be positive");
  if (y0.size() == 0) throw std::invalid_argument("integrate_ode: empty state vector");

  const int n_nodes = grid.n_points();
  const double t_end = grid.t_end();
  const double span = t_end - grid.t_start();

  std::vector<ComplexVector> out;
  out.reserve(static_cast<size_t>(n_nodes));
  out.push_back(y0);
  int next = 1;

  double t = grid.t_start();
  ComplexVector y = y0;
  ComplexVector k1 = rhs(t, y);
  if (!k1.allFinite())
    throw integration_error("integrate_ode: non-finite derivative at " + at_time(t), t);

  double h = initial_step(rhs, t, y, k1, span, tol);
  bool just_rejected = false;
  long n_steps = 0;

  ComplexVector k2, k3, k4, k5, k6, k7, y5, err_vec;
  while (next < n_nodes) {
    if (++n_steps > kMaxSteps)
      throw integration_error("integrate_ode: step budget exhausted at " + at_time(t), t);

    bool final_step = false;
    if (h >= t_end - t) {
      h = t_end - t;
      final_step = true;
    }
    if (!(t + h > t))
      throw integration_error("integrate_ode: step size underflow at " + at_time(t), t);

    k2 = rhs(t + c2 * h, y + h * (a21 * k1));
    k3 = rhs(t + c3 * h, y + h * (a31 * k1 + a32 * k2));
    k4 = rhs(t + c4 * h, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
    k5 = rhs(t + c5 * h, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    k6 = rhs(t + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    y5 = y + h * (a71 * k1 + a73 * k3 + a74 * k4 + a75 * k5 + a76 * k6);
    k7 = rhs(t + h, y5);
    err_vec = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

    double err = error_norm(err_vec, y, y5, tol);
    if (!y5.allFinite() || !k7.allFinite() || !std::isfinite(err))
      err = std::numeric_limits<double>::infinity();

    if (err <= 1.0) {
      // Accepted: build the quartic interpolant and emit every grid node
      // inside (t, t + h].
      const double t_new = final_step ? t_end : t + h;
      const ComplexVector ydiff = y5 - y;
      const ComplexVector bspl = h * k1 - ydiff;
      const ComplexVector& rcont1 = y;
      const ComplexVector& rcont2 = ydiff;
      const ComplexVector& rcont3 = bspl;
      const ComplexVector rcont4 = ydiff - h * k7 - bspl;
      const ComplexVector rcont5 =
          h * (d1 * k1 + d3 * k3 + d4 * k4 + d5 * k5 + d6 * k6 + d7 * k7);
      while (next < n_nodes && grid.time(next) <= t_new) {
        const double s = std::clamp((grid.time(next) - t) / h, 0.0, 1.0);
        const double s1 = 1.0 - s;
        out.push_back(rcont1 + s * (rcont2 + s1 * (rcont3 + s * (rcont4 + s1 * rcont5))));
        ++next;
      }
      t = t_new;
      y.swap(y5);
      k1.swap(k7);  // first-same-as-last
      double fac = kSafety * std::pow(err, -0.2);
      const double fac_max = just_rejected ? 1.0 : kGrowLimit;
      fac = std::min(fac_max, std::max(kShrinkLimit, fac));
      h *= fac;
      just_rejected = false;
    } else {
      double fac = kSafety * std::pow(err, -0.2);
      fac = std::min(1.0, std::max(kShrinkLimit, fac));
      if (!(fac < 1.0)) fac = kShrinkLimit;  // guards NaN / no-op shrink
      h *= fac;
      just_rejected = true;
    }
  }
  return out;
}

std::vector<ComplexVector> integrate_ode_rk4(const OdeRhs& rhs, const ComplexVector& y0,
                                             const TimeGrid& grid, int substeps) {
  if (substeps < 1) throw std::invalid_argument("integrate_ode_rk4: substeps must be >= 1");
  if (y0.size() == 0) throw std::invalid_argument("integrate_ode_rk4: empty state vector");

  std::vector<ComplexVector> out;
  out.reserve(static_cast<size_t>(grid.n_points()));
  out.push_back(y0);
  ComplexVector y = y0;
  for (int i = 0; i + 1 < grid.n_points(); ++i) {
    const double t0 = grid.time(i);
    const double h = (grid.time(i + 1) - t0) / static_cast<double>(substeps);
    for (int j = 0; j < substeps; ++j) {
      const double t = t0 + j * h;
      const ComplexVector k1 = rhs(t, y);
      const ComplexVector k2 = rhs(t + 0.5 * h, y + (0.5 * h) * k1);
      const ComplexVector k3 = rhs(t + 0.5 * h, y + (0.5 * h) * k2);
      const ComplexVector k4 = rhs(t + h, y + h * k3);
      y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    if (!y.allFinite())
      throw integration_error("integrate_ode_rk4: non-finite state at " + at_time(grid.time(i + 1)),
                              grid.time(i + 1));
    out.push_back(y);
  }
  return out;
}

}  // namespace djc
