#include "septensor/lowrank.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <cstddef>
#include <nlohmann/json.hpp>
#include <string>

#include "septensor/csv.hpp"
#include "septensor/errors.hpp"
#include "septensor/numfmt.hpp"

namespace septensor {
namespace {

// Largest-magnitude entry of a column; ties go to the lowest row so the sign
// convention is reproducible across runs.
Eigen::Index dominant_row(const Eigen::MatrixXd& m, Eigen::Index col) {
  Eigen::Index best = 0;
  double best_mag = std::abs(m(0, col));
  for (Eigen::Index i = 1; i < m.rows(); ++i) {
    const double mag = std::abs(m(i, col));
    if (mag > best_mag) {
      best_mag = mag;
      best = i;
    }
  }
  return best;
}

void apply_sign_convention(Eigen::MatrixXd& u, Eigen::MatrixXd& v) {
  const Eigen::Index paired = std::min(u.cols(), v.cols());
  for (Eigen::Index k = 0; k < u.cols(); ++k) {
    const Eigen::Index i = dominant_row(u, k);
    if (std::signbit(u(i, k))) {
      u.col(k) = -u.col(k);
      if (k < paired) v.col(k) = -v.col(k);
    }
  }
}

nlohmann::json matrix_to_json(const Eigen::MatrixXd& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

void SvdFactors::validate(const Eigen::MatrixXd& f_matrix) const {
  const Eigen::Index m = f_matrix.rows();
  const Eigen::Index n = f_matrix.cols();
  if (U.rows() != m || U.cols() != m || V.rows() != n || V.cols() != n ||
      sigma.size() != std::min(m, n)) {
    throw NumericError("SVD factor dimensions do not match the matrix");
  }
  for (Eigen::Index k = 0; k < sigma.size(); ++k) {
    if (!std::isfinite(sigma[k]) || sigma[k] < 0.0) {
      throw NumericError("singular values must be finite and nonnegative");
    }
    if (k > 0 && sigma[k] > sigma[k - 1]) {
      throw NumericError("singular values must be non-increasing");
    }
  }
  const double ortho_u =
      (U.transpose() * U - Eigen::MatrixXd::Identity(m, m)).norm();
  if (ortho_u > 1e-12 * static_cast<double>(m)) {
    throw NumericError("left factor is not orthogonal");
  }
  const double ortho_v =
      (V.transpose() * V - Eigen::MatrixXd::Identity(n, n)).norm();
  if (ortho_v > 1e-12 * static_cast<double>(n)) {
    throw NumericError("right factor is not orthogonal");
  }
  const Eigen::Index r = sigma.size();
  const Eigen::MatrixXd rebuilt =
      U.leftCols(r) * sigma.asDiagonal() * V.leftCols(r).transpose();
  if ((rebuilt - f_matrix).norm() > 1e-12 * f_matrix.norm()) {
    throw NumericError("SVD factors do not reproduce the matrix");
  }
}

SvdFactors svd_decompose(const Eigen::MatrixXd& f_matrix) {
  if (!f_matrix.allFinite()) {
    throw NumericError("matrix passed to the SVD has a non-finite entry");
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(f_matrix,
                                        Eigen::ComputeFullU | Eigen::ComputeFullV);
  SvdFactors factors;
  factors.U = svd.matrixU();
  factors.V = svd.matrixV();
  factors.sigma = svd.singularValues();
  apply_sign_convention(factors.U, factors.V);
  factors.validate(f_matrix);
  return factors;
}

double frobenius_tail(const SvdFactors& factors, int K) {
  if (K < 0 || K > factors.sigma.size()) {
    throw InvalidRank("tail index out of range");
  }
  double sum = 0.0;
  for (Eigen::Index k = K; k < factors.sigma.size(); ++k) {
    sum += factors.sigma[k] * factors.sigma[k];
  }
  return std::sqrt(sum);
}

int admissible_rank(const SvdFactors& factors) {
  if (factors.sigma.size() == 0) return 0;
  const double cutoff = 1e-14 * factors.sigma[0];
  int count = 0;
  for (Eigen::Index k = 0; k < factors.sigma.size(); ++k) {
    if (factors.sigma[k] >= cutoff && factors.sigma[k] > 0.0) ++count;
  }
  return count;
}

double LowRankApprox::evaluate(double x, double y) const {
  const Eigen::VectorXd q = basis_x.evaluate(source, x);
  const Eigen::VectorXd s = basis_y.evaluate(source, y);
  const Eigen::VectorXd phi = phi_coeffs * q;
  const Eigen::VectorXd psi = psi_coeffs * s;
  double value = 0.0;
  for (int k = 0; k < rank; ++k) value += sigma[k] * phi[k] * psi[k];
  return value;
}

Eigen::MatrixXd LowRankApprox::values_on_grids(const Grid& gx, const Grid& gy) const {
  const Eigen::MatrixXd phi_g =
      basis_x.values_on_grid(source, gx) * phi_coeffs.transpose();
  const Eigen::MatrixXd psi_g =
      basis_y.values_on_grid(source, gy) * psi_coeffs.transpose();
  return phi_g * sigma.asDiagonal() * psi_g.transpose();
}

Eigen::MatrixXd LowRankApprox::component_values(Direction direction, const Grid& g) const {
  if (direction == Direction::x) {
    return basis_x.values_on_grid(source, g) * phi_coeffs.transpose();
  }
  return basis_y.values_on_grid(source, g) * psi_coeffs.transpose();
}

LowRankApprox truncate(const TensorInterpolant& t, const SvdFactors& factors, int K) {
  const int max_k = static_cast<int>(factors.sigma.size());
  if (K < 1 || K > max_k) {
    throw InvalidRank("truncation rank " + std::to_string(K) +
                      " is outside [1, " + std::to_string(max_k) + "]");
  }
  const int admissible = admissible_rank(factors);
  if (K > admissible) {
    throw InvalidRank("truncation rank " + std::to_string(K) +
                      " exceeds the numerical rank " + std::to_string(admissible));
  }
  return LowRankApprox{K,
                       Eigen::VectorXd(factors.sigma.head(K)),
                       Eigen::MatrixXd(factors.U.leftCols(K).transpose()),
                       Eigen::MatrixXd(factors.V.leftCols(K).transpose()),
                       t.basis_x,
                       t.basis_y,
                       t.source};
}

void write_svd_json(const SvdFactors& factors, int K, const std::filesystem::path& path) {
  nlohmann::json doc;
  doc["sigma"] = nlohmann::json::array();
  for (Eigen::Index k = 0; k < factors.sigma.size(); ++k) doc["sigma"].push_back(factors.sigma[k]);
  doc["U"] = matrix_to_json(factors.U);
  doc["V"] = matrix_to_json(factors.V);
  doc["K"] = K;
  write_text_file(path, doc.dump(2) + "\n");
}

void write_component_csv(const LowRankApprox& approx, Direction direction, const Grid& g,
                         const std::filesystem::path& path) {
  const Eigen::MatrixXd values = approx.component_values(direction, g);
  const char* stem = direction == Direction::x ? "phi_" : "psi_";
  std::vector<std::string> header;
  header.emplace_back("t");
  for (int k = 1; k <= approx.rank; ++k) header.push_back(stem + std::to_string(k));
  std::vector<std::vector<double>> rows;
  rows.reserve(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    std::vector<double> row;
    row.reserve(static_cast<std::size_t>(approx.rank) + 1);
    row.push_back(g[i]);
    for (int k = 0; k < approx.rank; ++k) row.push_back(values(static_cast<Eigen::Index>(i), k));
    rows.push_back(std::move(row));
  }
  write_csv_table(path, header, rows);
}

}  // namespace septensor
