#include "septensor/eim.hpp"

#include <cmath>
#include <functional>
#include <ostream>
#include <string>

#include "septensor/errors.hpp"
#include "septensor/numfmt.hpp"

namespace septensor {

namespace {

Interval domain_for(const FunctionSource& f, Direction dir, bool space) {
  const bool use_x = (dir == Direction::x) == space;
  return use_x ? f.domain_x() : f.domain_y();
}

void check_grid_in(const Interval& domain, const Grid& g, const char* what) {
  if (g.front() < domain.lo || g.back() > domain.hi) {
    throw ConfigError(std::string(what) + " grid exceeds the function domain");
  }
}

// Eigen index shorthand; ranks and grid sizes stay well below overflow range.
Eigen::Index idx(std::size_t v) { return static_cast<Eigen::Index>(v); }

// Turns raw slice values (one column per evaluation point) into cardinal
// basis values by the two triangular substitutions, one multiply-subtract at
// a time in the same order the greedy elimination used. Eigen's triangular
// solvers reassociate the accumulations; with steeply decaying pivots the
// trailing divisions amplify those last-ulp differences enough to break the
// Lagrange property at the magic points, so the loops are spelled out.
Eigen::MatrixXd cardinal_from_slices(const Eigen::MatrixXd& residual_rows,
                                     const Eigen::MatrixXd& residual_columns,
                                     Eigen::MatrixXd v) {
  const Eigen::Index r = v.rows();
  for (Eigen::Index i = 0; i < r; ++i) {
    v.row(i) /= residual_rows(i, i);
    for (Eigen::Index j = i + 1; j < r; ++j) {
      v.row(j) -= residual_rows(i, j) * v.row(i);
    }
  }
  for (Eigen::Index i = r - 1; i >= 0; --i) {
    for (Eigen::Index j = 0; j < i; ++j) {
      v.row(j) -= residual_columns(i, j) * v.row(i);
    }
  }
  return v;
}

}  // namespace

EimConfig make_eim_config(const FunctionSource& f, Direction direction, int max_rank,
                          std::size_t selection_points) {
  if (max_rank < 1) {
    throw ConfigError("max_rank must be >= 1, got " + std::to_string(max_rank));
  }
  const bool dir_x = direction == Direction::x;
  EimConfig cfg{
      .max_rank = max_rank,
      .pivot_tol = 1e-12,
      .residual_tol = std::nullopt,
      .selection_space = f.is_tabulated() ? (dir_x ? f.x_nodes() : f.y_nodes())
                                          : make_uniform_grid(domain_for(f, direction, true),
                                                              selection_points),
      .selection_param = f.is_tabulated() ? (dir_x ? f.y_nodes() : f.x_nodes())
                                          : make_uniform_grid(domain_for(f, direction, false),
                                                              selection_points),
  };
  return cfg;
}

double DirectionalBasis::slice_value(const FunctionSource& f, double t, double pivot) const {
  return direction == Direction::x ? f.eval(t, pivot) : f.eval(pivot, t);
}

Eigen::VectorXd DirectionalBasis::evaluate(const FunctionSource& f, double t) const {
  if (!space_interval.contains(t)) {
    throw DomainError("basis evaluation point " + format_double(t) +
                      " lies outside the space interval");
  }
  const int m = achieved_rank();
  Eigen::VectorXd slices(m);
  for (int j = 0; j < m; ++j) {
    slices(j) = slice_value(f, t, pivots[static_cast<std::size_t>(j)]);
  }
  // Forward pass into residual-slice coordinates, then the unit-triangular
  // change of basis to Lagrange coordinates. The forward substitution repeats
  // the greedy loop's elimination arithmetic operation for operation, which
  // is what makes evaluation at a magic point land on an exact unit vector.
  const Eigen::MatrixXd q = cardinal_from_slices(residual_rows, residual_columns, slices);
  return q.col(0);
}

Eigen::MatrixXd DirectionalBasis::values_on_grid(const FunctionSource& f, const Grid& g) const {
  const int m = achieved_rank();
  Eigen::MatrixXd slices(m, idx(g.size()));  // one column per grid point
  for (std::size_t r = 0; r < g.size(); ++r) {
    for (int j = 0; j < m; ++j) {
      slices(j, idx(r)) = slice_value(f, g[r], pivots[static_cast<std::size_t>(j)]);
    }
  }
  const Eigen::MatrixXd q =
      cardinal_from_slices(residual_rows, residual_columns, std::move(slices));
  return q.transpose();
}

double DirectionalBasis::interpolate(const FunctionSource& f, double t, double param) const {
  if (!param_interval.contains(param)) {
    throw DomainError("interpolation parameter " + format_double(param) +
                      " lies outside the parameter interval");
  }
  const Eigen::VectorXd q = evaluate(f, t);
  double acc = 0.0;
  for (int i = 0; i < achieved_rank(); ++i) {
    acc += slice_value(f, points[static_cast<std::size_t>(i)], param) * q(i);
  }
  return acc;
}

namespace {

using SnapshotSink = std::function<void(const DirectionalBasis&)>;

DirectionalBasis greedy_eim(const FunctionSource& f, Direction direction, const EimConfig& cfg,
                            std::ostream* log, const SnapshotSink& snapshot) {
  if (cfg.max_rank < 1) {
    throw ConfigError("max_rank must be >= 1");
  }
  if (!(cfg.pivot_tol > 0.0)) {
    throw ConfigError("pivot_tol must be positive");
  }
  const Grid& space = cfg.selection_space;
  const Grid& param = cfg.selection_param;
  check_grid_in(domain_for(f, direction, true), space, "selection space");
  check_grid_in(domain_for(f, direction, false), param, "selection parameter");

  DirectionalBasis basis;
  basis.direction = direction;
  basis.space_interval = domain_for(f, direction, true);
  basis.param_interval = domain_for(f, direction, false);

  const Eigen::Index ns = idx(space.size());
  const Eigen::Index np = idx(param.size());

  // Sample the function once over the selection product grid; the greedy loop
  // then works on in-place rank-one residual updates.
  Eigen::MatrixXd samples(ns, np);
  for (Eigen::Index i = 0; i < ns; ++i) {
    for (Eigen::Index j = 0; j < np; ++j) {
      samples(i, j) = basis.slice_value(f, space[static_cast<std::size_t>(i)],
                                        param[static_cast<std::size_t>(j)]);
    }
  }
  if (!samples.allFinite()) {
    throw DomainError("function produced a non-finite value on the selection grids");
  }

  Eigen::MatrixXd residual = samples;
  std::vector<Eigen::Index> rows;  // selected space indices
  std::vector<Eigen::Index> cols;  // selected parameter indices
  std::vector<Eigen::VectorXd> col_history;     // normalized residual columns
  std::vector<Eigen::RowVectorXd> row_history;  // residual rows at selection

  // Packs the triangular factors of the magic submatrix, plus the flattened
  // slice-coefficient matrix, into a basis of the given rank.
  const auto fill_factors = [&](DirectionalBasis& b) {
    const int r = b.achieved_rank();
    b.residual_columns.resize(r, r);
    b.residual_rows.resize(r, r);
    for (int k = 0; k < r; ++k) {
      for (int l = 0; l < r; ++l) {
        b.residual_columns(l, k) = col_history[static_cast<std::size_t>(k)](
            rows[static_cast<std::size_t>(l)]);
        b.residual_rows(l, k) = l <= k ? row_history[static_cast<std::size_t>(l)](
                                             cols[static_cast<std::size_t>(k)])
                                       : 0.0;
      }
    }
    b.coeffs = cardinal_from_slices(b.residual_rows, b.residual_columns,
                                    Eigen::MatrixXd::Identity(r, r));
  };

  for (int k = 0; k < cfg.max_rank; ++k) {
    // Parameter value with the largest residual sup over the space grid,
    // lowest index on ties; then the realizing space point.
    Eigen::Index best_col = 0;
    Eigen::Index best_row = 0;
    double best = -1.0;
    for (Eigen::Index j = 0; j < np; ++j) {
      Eigen::Index row = 0;
      double colmax = -1.0;
      for (Eigen::Index i = 0; i < ns; ++i) {
        const double v = std::abs(residual(i, j));
        if (v > colmax) {
          colmax = v;
          row = i;
        }
      }
      if (colmax > best) {
        best = colmax;
        best_col = j;
        best_row = row;
      }
    }
    const double pivot = residual(best_row, best_col);
    const double pivot_mag = std::abs(pivot);

    if (k == 0 && pivot_mag < 1e-300) {
      throw ZeroFunction("first pivot magnitude " + format_double(pivot_mag) +
                         " is numerically zero");
    }
    if (k > 0) {
      if (cfg.residual_tol && pivot_mag <= *cfg.residual_tol) break;
      if (pivot_mag < cfg.pivot_tol * basis.pivot_magnitudes.front()) break;
    }

    basis.points.push_back(space[static_cast<std::size_t>(best_row)]);
    basis.pivots.push_back(param[static_cast<std::size_t>(best_col)]);
    basis.pivot_magnitudes.push_back(pivot_mag);
    rows.push_back(best_row);
    cols.push_back(best_col);

    const Eigen::VectorXd scaled_col = residual.col(best_col) / pivot;
    const Eigen::RowVectorXd pivot_row = residual.row(best_row);
    col_history.push_back(scaled_col);
    row_history.push_back(pivot_row);
    residual.noalias() -= scaled_col * pivot_row;

    if (log != nullptr) {
      *log << "iter " << (k + 1) << ": pivot=" << format_double(pivot_mag)
           << " point=" << format_double(basis.points.back())
           << " param=" << format_double(basis.pivots.back()) << "\n";
    }

    fill_factors(basis);

    // Re-verify the Lagrange property the way an external caller would see
    // it: raw slice values at the magic points, pushed through both solves.
    Eigen::MatrixXd magic(k + 1, k + 1);
    for (int l = 0; l <= k; ++l) {
      for (int j = 0; j <= k; ++j) {
        magic(l, j) = samples(rows[static_cast<std::size_t>(l)],
                              cols[static_cast<std::size_t>(j)]);
      }
    }
    const Eigen::MatrixXd lagrange =
        cardinal_from_slices(basis.residual_rows, basis.residual_columns, magic.transpose());
    const double lagrange_dev =
        (lagrange - Eigen::MatrixXd::Identity(k + 1, k + 1)).cwiseAbs().maxCoeff();
    if (lagrange_dev > 1e-8 && log != nullptr) {
      *log << "iter " << (k + 1)
           << ": conditioning warning: Lagrange deviation=" << format_double(lagrange_dev)
           << "\n";
    }

    if (snapshot) {
      snapshot(basis);
    }
  }

  return basis;
}

}  // namespace

DirectionalBasis run_directional_eim(const FunctionSource& f, Direction direction,
                                     const EimConfig& cfg, std::ostream* log) {
  return greedy_eim(f, direction, cfg, log, SnapshotSink{});
}

std::vector<DirectionalBasis> run_directional_eim_sweep(const FunctionSource& f,
                                                        Direction direction, const EimConfig& cfg,
                                                        std::ostream* log) {
  std::vector<DirectionalBasis> out;
  greedy_eim(f, direction, cfg, log, [&out](const DirectionalBasis& b) { out.push_back(b); });
  return out;
}

}  // namespace septensor
