#pragma once

#include <Eigen/Core>
#include <filesystem>

#include "septensor/eim.hpp"
#include "septensor/function_source.hpp"

namespace septensor {

/// Tensor-product interpolant assembled from the two directional bases and
/// the collocation matrix F(i, j) = f(x_i, y_j) at the magic-point grid.
struct TensorInterpolant {
  DirectionalBasis basis_x;
  DirectionalBasis basis_y;
  Eigen::MatrixXd collocation;  // m x n
  FunctionSource source;

  int rank_x() const noexcept { return basis_x.achieved_rank(); }
  int rank_y() const noexcept { return basis_y.achieved_rank(); }

  /// q(x)^T F s(y), applied in that fixed order.
  double evaluate(double x, double y) const;

  /// Interpolant values over a product grid in one sweep; row r corresponds
  /// to gx[r].
  Eigen::MatrixXd values_on_grids(const Grid& gx, const Grid& gy) const;
};

/// Assembles F by direct evaluation at the magic-point tensor grid. Both
/// bases must come from the given source. Throws DomainError if any sample is
/// non-finite.
TensorInterpolant build_tensor_interpolant(const FunctionSource& f, DirectionalBasis basis_x,
                                           DirectionalBasis basis_y);

/// {"x_points": [...], "y_points": [...], "x_pivots": [...], "y_pivots": [...]}
void write_points_json(const TensorInterpolant& t, const std::filesystem::path& path);

/// F in the tabulated CSV layout: row i carries x_i, header carries the y_j.
void write_collocation_csv(const TensorInterpolant& t, const std::filesystem::path& path);

}  // namespace septensor
