#pragma once

#include <vector>

namespace djc {

/// Uniform output grid on [t_start, t_end]. Times are in units of the inverse
/// coupling (the tables report the dimensionless product of coupling and time).
class TimeGrid {
 public:
  /// Requires t_end > t_start >= 0 and n_points >= 2; throws std::invalid_argument.
  TimeGrid(double t_start, double t_end, int n_points);

  double t_start() const { return t_start_; }
  double t_end() const { return t_end_; }
  int n_points() const { return n_points_; }
  double dt() const { return dt_; }

  /// i-th node; the last node is exactly t_end (no rounding overshoot).
  double time(int i) const;
  std::vector<double> times() const;

 private:
  double t_start_;
  double t_end_;
  int n_points_;
  double dt_;
};

}  // namespace djc
