#pragma once

#include <Eigen/Core>
#include <filesystem>
#include <functional>
#include <map>
#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>
#include <vector>

#include "septensor/lowrank.hpp"

namespace septensor {

/// One verified inequality. `pass` is empty for informational entries whose
/// right-hand side cannot be computed; for all others, pass == true implies
/// lhs <= rhs * (1 + 1e-10).
struct BoundCheck {
  std::string name;
  int index = -1;  // rank K or basis index i, -1 when not applicable
  double lhs = 0.0;
  double rhs = 0.0;
  std::optional<bool> pass;
  std::string note;
};

struct DiagnosticsReport {
  std::vector<double> lebesgue_x;  // L_1..L_m over the rank sweep
  std::vector<double> lebesgue_y;
  double sup_error_interp = 0.0;   // sup |f - interpolant| on the dense grids
  std::map<int, double> sup_error_lowrank;  // K -> sup |f - rank-K surrogate|
  std::vector<double> sigma;
  std::vector<BoundCheck> bound_checks;

  bool all_checks_pass() const;
};

/// sup over the dense grid of sum_i |q_i(t)|.
double lebesgue_constant(const DirectionalBasis& b, const FunctionSource& f,
                         const Grid& dense);

/// Samples f on the tensor grid; throws DomainError on a non-finite value.
Eigen::MatrixXd sample_on_grids(const FunctionSource& f, const Grid& gx, const Grid& gy);

/// sup over the tensor grid of |f - surrogate|; throws DomainError if either
/// produces a non-finite value.
double sup_error(const FunctionSource& f,
                 const std::function<double(double, double)>& surrogate,
                 const Grid& gx, const Grid& gy);

/// Fills sup errors, sigma, and the bound-check list. Checks emitted, in
/// order: "lebesgue-exponential" (L <= 2^rank - 1, one per direction),
/// "basis-sup" (|q_i| <= 2^(m-1) per basis function, both directions),
/// "eckart-young" (Frobenius tail equals the truncation error, per K),
/// "truncation-sandwich" (sup |interpolant - surrogate| against the
/// Lebesgue-weighted tail, per K), plus informational entries for the
/// best-approximation terms that cannot be evaluated from samples.
/// Pre-filled lebesgue_x / lebesgue_y lists are kept; empty lists are set to
/// the single final-rank constant.
DiagnosticsReport verify_bounds(const TensorInterpolant& t, const SvdFactors& factors,
                                DiagnosticsReport report, const Grid& diag_x,
                                const Grid& diag_y);

/// Per-rank data behind the convergence and stability curves: Lebesgue
/// constants L_1..L_m per direction and sup |f - interpolant| for the square
/// rank-r interpolants, r = 1..min(m, n).
struct RankSweep {
  std::vector<double> lebesgue_x;
  std::vector<double> lebesgue_y;
  std::vector<double> interp_sup_error;
};

RankSweep run_rank_sweep(const FunctionSource& f, const EimConfig& cfg_x,
                         const EimConfig& cfg_y, const Grid& diag_x, const Grid& diag_y);

nlohmann::json report_to_json(const DiagnosticsReport& report);
DiagnosticsReport report_from_json(const nlohmann::json& j);
void write_report_json(const DiagnosticsReport& report, const std::filesystem::path& path);
DiagnosticsReport read_report_json(const std::filesystem::path& path);

/// "m,L_m,bound" with bound = 2^m - 1.
void write_lebesgue_csv(const std::vector<double>& lebesgue, const std::filesystem::path& path);
/// "m,sup_error"
void write_errors_csv(const std::vector<double>& sup_errors, const std::filesystem::path& path);
/// "k,sigma_k"
void write_sigma_csv(const std::vector<double>& sigma, const std::filesystem::path& path);
/// "name,K,lhs,rhs,pass"; pass is empty for informational entries.
void write_bounds_csv(const std::vector<BoundCheck>& checks, const std::filesystem::path& path);

}  // namespace septensor
