#include "djc/time_grid.hpp"

#include <stdexcept>
#include <string>

namespace djc {

TimeGrid::TimeGrid(double t_start, double t_end, int n_points)
    : t_start_(t_start), t_end_(t_end), n_points_(n_points) {
  if (!(t_start >= 0.0))
    throw std::invalid_argument("TimeGrid: t_start must be >= 0, got " + std::to_string(t_start));
  if (!(t_end > t_start))
    throw std::invalid_argument("TimeGrid: t_end must exceed t_start, got [" +
                                std::to_string(t_start) + ", " + std::to_string(t_end) + "]");
  if (n_points < 2)
    throw std::invalid_argument("TimeGrid: n_points must be >= 2, got " +
                                std::to_string(n_points));
  dt_ = (t_end_ - t_start_) / static_cast<double>(n_points_ - 1);
}

double TimeGrid::time(int i) const {
  if (i < 0 || i >= n_points_) throw std::out_of_range("TimeGrid: node index out of range");
  if (i == n_points_ - 1) return t_end_;
  return t_start_ + static_cast<double>(i) * dt_;
}

std::vector<double> TimeGrid::times() const {
  std::vector<double> out(static_cast<size_t>(n_points_));
  for (int i = 0; i < n_points_; ++i) out[static_cast<size_t>(i)] = time(i);
  return out;
}

}  // namespace djc
