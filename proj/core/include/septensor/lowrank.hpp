#pragma once

#include <Eigen/Core>
#include <filesystem>

#include "septensor/tensor_interpolant.hpp"

namespace septensor {

/// Full SVD factors F = U diag(sigma) V^T with U, V square orthogonal and
/// sigma non-increasing. Columns carry a fixed sign convention: the largest-
/// magnitude entry of each U column is nonnegative (ties resolved to the
/// lowest row index), with the paired V column flipped alongside, so exports
/// are byte-stable.
struct SvdFactors {
  Eigen::MatrixXd U;
  Eigen::MatrixXd V;
  Eigen::VectorXd sigma;

  /// Checks orthogonality, the reconstruction error against F, and the
  /// ordering of sigma; throws NumericError on any violation.
  void validate(const Eigen::MatrixXd& f_matrix) const;
};

/// Throws NumericError on non-finite input.
SvdFactors svd_decompose(const Eigen::MatrixXd& f_matrix);

/// sqrt(sum of sigma_k^2 for k > K); the Frobenius error of the rank-K
/// truncation. K may be 0 (whole spectrum) up to min(m, n) (zero).
double frobenius_tail(const SvdFactors& factors, int K);

/// Largest admissible truncation rank: singular values below 1e-14 * sigma_1
/// count as zero and are excluded.
int admissible_rank(const SvdFactors& factors);

/// Rank-K separable surrogate sum_k sigma_k phi_k(x) psi_k(y), where the
/// component functions are rotations of the directional bases:
/// phi_k(x) = sum_i U(i, k) q_i(x) and psi_k(y) = sum_j V(j, k) s_j(y).
struct LowRankApprox {
  int rank = 0;
  Eigen::VectorXd sigma;       // first K singular values
  Eigen::MatrixXd phi_coeffs;  // K x m, row k = U column k
  Eigen::MatrixXd psi_coeffs;  // K x n, row k = V column k
  DirectionalBasis basis_x;
  DirectionalBasis basis_y;
  FunctionSource source;

  double evaluate(double x, double y) const;
  Eigen::MatrixXd values_on_grids(const Grid& gx, const Grid& gy) const;

  /// Component samples over a grid: column k holds phi_k (direction x) or
  /// psi_k (direction y).
  Eigen::MatrixXd component_values(Direction direction, const Grid& g) const;
};

/// Throws InvalidRank unless 1 <= K <= min(m, n) and K stays within the
/// admissible rank.
LowRankApprox truncate(const TensorInterpolant& t, const SvdFactors& factors, int K);

/// {"sigma": [...], "U": [[...]], "V": [[...]], "K": k}
void write_svd_json(const SvdFactors& factors, int K, const std::filesystem::path& path);

/// Table "t, phi_1, ..., phi_K" (or psi) sampled on the given grid.
void write_component_csv(const LowRankApprox& approx, Direction direction, const Grid& g,
                         const std::filesystem::path& path);

}  // namespace septensor
