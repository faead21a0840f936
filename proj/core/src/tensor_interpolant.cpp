#include "septensor/tensor_interpolant.hpp"

#include <nlohmann/json.hpp>

#include "septensor/csv.hpp"
#include "septensor/errors.hpp"

namespace septensor {

double TensorInterpolant::evaluate(double x, double y) const {
  const Eigen::VectorXd q = basis_x.evaluate(source, x);
  const Eigen::VectorXd s = basis_y.evaluate(source, y);
  const Eigen::RowVectorXd left = q.transpose() * collocation;
  return left * s;
}

Eigen::MatrixXd TensorInterpolant::values_on_grids(const Grid& gx, const Grid& gy) const {
  const Eigen::MatrixXd qg = basis_x.values_on_grid(source, gx);  // |gx| x m
  const Eigen::MatrixXd sg = basis_y.values_on_grid(source, gy);  // |gy| x n
  return (qg * collocation) * sg.transpose();
}

TensorInterpolant build_tensor_interpolant(const FunctionSource& f, DirectionalBasis basis_x,
                                           DirectionalBasis basis_y) {
  if (basis_x.direction != Direction::x || basis_y.direction != Direction::y) {
    throw ConfigError("build_tensor_interpolant expects an x-direction and a y-direction basis");
  }
  const int m = basis_x.achieved_rank();
  const int n = basis_y.achieved_rank();
  Eigen::MatrixXd collocation(m, n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      collocation(i, j) = f.eval(basis_x.points[static_cast<std::size_t>(i)],
                                 basis_y.points[static_cast<std::size_t>(j)]);
    }
  }
  if (!collocation.allFinite()) {
    throw DomainError("non-finite sample in the collocation matrix");
  }
  return TensorInterpolant{std::move(basis_x), std::move(basis_y), std::move(collocation), f};
}

void write_points_json(const TensorInterpolant& t, const std::filesystem::path& path) {
  nlohmann::json j;
  j["x_points"] = t.basis_x.points;
  j["y_points"] = t.basis_y.points;
  j["x_pivots"] = t.basis_y.pivots;  // parameter pivots of the y run live on the x axis
  j["y_pivots"] = t.basis_x.pivots;
  write_text_file(path, j.dump(2) + "\n");
}

void write_collocation_csv(const TensorInterpolant& t, const std::filesystem::path& path) {
  write_tabulated_csv(path, t.basis_x.points, t.basis_y.points, t.collocation);
}

}  // namespace septensor
