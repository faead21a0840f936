#include "septensor/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace septensor {

Interval make_interval(double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw InvalidGrid("interval bounds must be finite");
  }
  if (!(lo < hi)) {
    throw InvalidGrid("interval requires lo < hi, got [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
  }
  return Interval{lo, hi};
}

Grid::Grid(Interval interval, std::vector<double> points)
    : interval_(interval), points_(std::move(points)) {
  if (points_.size() < 2) {
    throw InvalidGrid("grid needs at least 2 points");
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!std::isfinite(points_[i])) {
      throw InvalidGrid("grid point " + std::to_string(i) + " is not finite");
    }
    if (i > 0 && !(points_[i - 1] < points_[i])) {
      throw InvalidGrid("grid points must be strictly increasing (index " + std::to_string(i) +
                        ")");
    }
  }
  if (points_.front() < interval_.lo || points_.back() > interval_.hi) {
    throw InvalidGrid("grid points fall outside the interval");
  }
  if (points_.front() != interval_.lo || points_.back() != interval_.hi) {
    throw InvalidGrid("grid must include both interval endpoints");
  }
}

std::optional<std::size_t> Grid::find_node(double t, double abs_tol) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), t - abs_tol);
  if (it == points_.end()) return std::nullopt;
  if (std::abs(*it - t) <= abs_tol) {
    return static_cast<std::size_t>(it - points_.begin());
  }
  return std::nullopt;
}

Grid make_uniform_grid(Interval interval, std::size_t n) {
  interval = make_interval(interval.lo, interval.hi);
  if (n < 2) {
    throw InvalidGrid("uniform grid needs n >= 2, got " + std::to_string(n));
  }
  std::vector<double> pts(n);
  const double len = interval.hi - interval.lo;
  for (std::size_t i = 0; i < n; ++i) {
    pts[i] = interval.lo + len * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  // Endpoints are part of the contract; pin them against rounding in the
  // affine formula above.
  pts.front() = interval.lo;
  pts.back() = interval.hi;
  return Grid(interval, std::move(pts));
}

}  // namespace septensor
