#pragma once

#include <Eigen/Core>
#include <iosfwd>
#include <optional>
#include <vector>

#include "septensor/function_source.hpp"
#include "septensor/grid.hpp"

namespace septensor {

/// Which variable plays the space role in a directional greedy run; the other
/// variable acts as the parameter.
enum class Direction { x, y };

struct EimConfig {
  int max_rank = 10;
  /// Relative pivot cutoff: the loop stops once a pivot magnitude drops below
  /// pivot_tol times the first pivot magnitude.
  double pivot_tol = 1e-12;
  /// Optional early stop on the absolute sup-norm of the residual over the
  /// selection grids.
  std::optional<double> residual_tol;
  Grid selection_space;
  Grid selection_param;
};

/// Default configuration for one direction: uniform selection grids over the
/// function's domain, or the source's own node grids when it is tabulated.
EimConfig make_eim_config(const FunctionSource& f, Direction direction, int max_rank,
                          std::size_t selection_points = 401);

/// Result of a directional greedy run: magic points in the space variable,
/// the parameter values whose slices were absorbed into the basis, and the
/// coefficient matrix expressing each Lagrange basis function as an exact
/// linear combination of those slices:
///
///   q_i(t) = sum_j coeffs(i, j) * f(t, pivots[j])     (direction x)
///   s_i(t) = sum_j coeffs(i, j) * f(pivots[j], t)     (direction y)
///
/// Storing coefficients rather than sampled values keeps evaluation exact at
/// arbitrary points of analytic sources.
///
/// Evaluation does not multiply by coeffs directly: once the pivots decay,
/// its entries grow like one over the last pivot and the cancellation in the
/// sum above loses every significant digit. The greedy elimination is an LU
/// factorization of the magic submatrix [f(t_i, pivots[j])], and both factors
/// have entries bounded by the first pivot, so evaluation solves the two
/// triangular systems instead. At a magic point this reproduces the unit
/// vector of the Lagrange property exactly. coeffs is the same linear map in
/// flattened form, kept because it makes the slice expansion explicit.
struct DirectionalBasis {
  Direction direction = Direction::x;
  Interval space_interval{0.0, 1.0};
  Interval param_interval{0.0, 1.0};
  std::vector<double> points;
  std::vector<double> pivots;
  Eigen::MatrixXd coeffs;
  std::vector<double> pivot_magnitudes;
  /// Unit lower triangular. Entry (l, k) is the k-th normalized residual
  /// slice evaluated at magic point l; zeros above the diagonal and the unit
  /// diagonal are exact by construction.
  Eigen::MatrixXd residual_columns;
  /// Upper triangular. Entry (i, k) is the step-i residual slice at
  /// pivots[k]; the diagonal carries the signed pivot values.
  Eigen::MatrixXd residual_rows;

  int achieved_rank() const noexcept { return static_cast<int>(points.size()); }

  /// (q_1(t), ..., q_m(t)) via the slice expansion above.
  Eigen::VectorXd evaluate(const FunctionSource& f, double t) const;

  /// All basis values over a grid; row r holds (q_1(g[r]), ..., q_m(g[r])).
  Eigen::MatrixXd values_on_grid(const FunctionSource& f, const Grid& g) const;

  /// Directional interpolant sum_i f(t_i, param) q_i(t), with the roles of
  /// the arguments swapped for direction y.
  double interpolate(const FunctionSource& f, double t, double param) const;

  /// f(t, pivot) for direction x, f(pivot, t) for direction y.
  double slice_value(const FunctionSource& f, double t, double pivot) const;
};

/// Greedy directional empirical interpolation. Each iteration picks the
/// parameter value with the worst residual sup over the space grid, then the
/// space point realizing that residual, and normalizes the residual slice
/// into the next Lagrange basis function; earlier basis functions are updated
/// so the full Lagrange property keeps holding. Ties in any argmax resolve to
/// the lowest grid index.
///
/// Throws ZeroFunction when the very first pivot magnitude is below 1e-300
/// and DomainError when the selection samples contain non-finite values.
/// When log is non-null, one line per iteration is written to it.
DirectionalBasis run_directional_eim(const FunctionSource& f, Direction direction,
                                     const EimConfig& cfg, std::ostream* log = nullptr);

/// Same greedy run, returning the basis after every iteration: element r-1 is
/// the rank-r basis. The last element is bit-identical to the result of
/// run_directional_eim with the same config, and the per-rank prefixes of
/// points, pivots, and pivot magnitudes all agree.
std::vector<DirectionalBasis> run_directional_eim_sweep(const FunctionSource& f,
                                                        Direction direction, const EimConfig& cfg,
                                                        std::ostream* log = nullptr);

}  // namespace septensor
