#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "septensor/errors.hpp"

namespace septensor {

/// Closed bounded interval [lo, hi] with lo < hi.
struct Interval {
  double lo;
  double hi;

  double length() const noexcept { return hi - lo; }
  bool contains(double t) const noexcept { return t >= lo && t <= hi; }
};

/// Validates the interval invariants (finite bounds, lo < hi).
Interval make_interval(double lo, double hi);

/// Strictly increasing sample points covering an interval, endpoints included.
/// Used both as selection/diagnostics grids and as the node set of tabulated
/// data.
class Grid {
 public:
  Grid(Interval interval, std::vector<double> points);

  const Interval& interval() const noexcept { return interval_; }
  const std::vector<double>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  double operator[](std::size_t i) const noexcept { return points_[i]; }
  double front() const noexcept { return points_.front(); }
  double back() const noexcept { return points_.back(); }

  /// Index of the node matching t within the given absolute tolerance, or
  /// nullopt if t falls between nodes.
  std::optional<std::size_t> find_node(double t, double abs_tol = 1e-14) const;

 private:
  Interval interval_;
  std::vector<double> points_;
};

/// n equispaced points on the interval, both endpoints included. n >= 2.
Grid make_uniform_grid(Interval interval, std::size_t n);

}  // namespace septensor
