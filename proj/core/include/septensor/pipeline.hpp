#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "septensor/diagnostics.hpp"

namespace septensor {

/// End-to-end run description. Exactly one of builtin_name / expression /
/// tabulated_path selects the function; the domain bounds apply to builtin and
/// expression sources (tabulated sources carry their own nodes).
struct RunConfig {
  std::string builtin_name;
  std::string expression;
  std::filesystem::path tabulated_path;
  double xmin = 0.0;
  double xmax = 1.0;
  double ymin = 0.0;
  double ymax = 1.0;
  int m = 10;
  int n = 10;
  std::optional<int> K;
  std::size_t selection_grid = 401;
  std::size_t diag_grid = 1001;
  std::filesystem::path out_dir = "out";
  bool verbose = false;
};

FunctionSource make_source(const RunConfig& cfg);

struct DecomposeResult {
  int rank = 0;        // truncation rank used for the exports
  double rel_err = 0;  // sup |f - surrogate| / sup |f| on the diagnostics grids
  TensorInterpolant interpolant;
  SvdFactors factors;
  DiagnosticsReport report;
  double f_sup = 0;  // sup |f| on the diagnostics grids
};

/// Runs the full decomposition and writes points.json, F.csv, svd.json,
/// phi_k.csv, psi_k.csv, diagnostics.json, lebesgue.csv, lebesgue_y.csv,
/// errors.csv, sigma.csv, and bounds.csv into cfg.out_dir.
DecomposeResult run_decompose(const RunConfig& cfg, std::ostream* log = nullptr);

/// Decomposes the built-in "paper-f" with the default configuration, writes
/// everything run_decompose writes plus the basis sample tables q_basis.csv /
/// s_basis.csv, the 201x201 field tables f_field.csv / approx_field.csv /
/// error_field.csv for the rank-2 surrogate, and summary.json. Returns the
/// rank-2 relative sup error recorded in summary.json.
double run_reproduce_paper(const std::filesystem::path& out_dir, std::ostream* log = nullptr);

/// Runs the decomposition and bound checks without writing artifacts.
DiagnosticsReport run_validate(const RunConfig& cfg, std::ostream* log = nullptr);

}  // namespace septensor
