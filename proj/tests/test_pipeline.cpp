#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <vector>

#include "septensor/csv.hpp"
#include "septensor/pipeline.hpp"
#include "support/oracles.hpp"

using namespace septensor;
namespace fs = std::filesystem;

namespace {

const char* const kDecomposeArtifacts[] = {
    "points.json",  "F.csv",      "svd.json",   "phi_k.csv",
    "psi_k.csv",    "diagnostics.json",         "lebesgue.csv",
    "lebesgue_y.csv", "errors.csv", "sigma.csv", "bounds.csv",
};

std::size_t data_rows(const std::string& csv) {
  std::size_t lines = 0;
  for (char c : csv) {
    if (c == '\n') ++lines;
  }
  return lines - 1;  // header
}

}  // namespace

TEST_CASE("make_source demands exactly one function description") {
  RunConfig cfg;
  CHECK_THROWS_AS(make_source(cfg), ConfigError);

  cfg.builtin_name = "paper-f";
  cfg.expression = "x + y";
  CHECK_THROWS_AS(make_source(cfg), ConfigError);

  cfg.expression.clear();
  CHECK(make_source(cfg).kind() == SourceKind::builtin);

  cfg.builtin_name = "no-such-builtin";
  CHECK_THROWS_AS(make_source(cfg), ConfigError);

  cfg.builtin_name = "paper-f";
  cfg.xmin = 1.0;
  cfg.xmax = 1.0;
  CHECK_THROWS_AS(make_source(cfg), InvalidGrid);

  RunConfig bad_expr;
  bad_expr.expression = "x +";
  CHECK_THROWS_AS(make_source(bad_expr), SyntaxError);
}

TEST_CASE("decomposing a separable function recovers it to machine precision") {
  oracles::TempDir dir;
  RunConfig cfg;
  cfg.builtin_name = "rank1-sep";
  cfg.m = 4;
  cfg.n = 4;
  cfg.selection_grid = 201;
  cfg.diag_grid = 301;
  cfg.out_dir = dir.path();
  const DecomposeResult res = run_decompose(cfg);
  CHECK(res.rank == 1);
  CHECK(res.rel_err <= 1e-12);
  CHECK(res.f_sup == doctest::Approx(2.0 * std::exp(1.0)).epsilon(1e-13));

  for (const char* name : kDecomposeArtifacts) {
    CAPTURE(name);
    CHECK(fs::exists(dir.path() / name));
  }

  std::ifstream in(dir.path() / "points.json");
  nlohmann::json points;
  in >> points;
  CHECK(points.at("x_points").size() == 1);
  CHECK(points.at("y_points").size() == 1);
  CHECK(points.at("x_pivots").size() == 1);
  CHECK(points.at("y_pivots").size() == 1);
}

TEST_CASE("rank-2 and rank-3 truncations of the reference function hit their error levels") {
  oracles::TempDir dir;
  RunConfig cfg;
  cfg.builtin_name = "paper-f";
  cfg.K = 2;
  cfg.out_dir = dir.path();
  const DecomposeResult res = run_decompose(cfg);
  CHECK(res.rank == 2);
  // sigma_3 of the 10x10 collocation matrix is ~1.03, so the two-term
  // surrogate sits at a genuine 7 percent; one more term reaches 1 percent.
  CHECK(res.rel_err <= 0.08);
  CHECK(res.rel_err >= 0.02);
  CHECK(res.report.all_checks_pass());

  oracles::TempDir dir3;
  cfg.K = 3;
  cfg.out_dir = dir3.path();
  const DecomposeResult res3 = run_decompose(cfg);
  CHECK(res3.rank == 3);
  CHECK(res3.rel_err <= 0.02);
}

TEST_CASE("rank requests are validated before any work happens") {
  RunConfig cfg;
  cfg.builtin_name = "paper-f";

  cfg.K = 99;
  CHECK_THROWS_WITH_AS(run_decompose(cfg), "K exceeds min(m,n)", ConfigError);
  cfg.K = 0;
  CHECK_THROWS_AS(run_decompose(cfg), ConfigError);
  cfg.K.reset();
  cfg.m = 0;
  CHECK_THROWS_AS(run_decompose(cfg), ConfigError);
}

TEST_CASE("a rank request beyond the numerical rank is rejected") {
  RunConfig cfg;
  cfg.builtin_name = "rank1-sep";
  cfg.m = 3;
  cfg.n = 3;
  cfg.K = 2;  // allowed by min(m,n) but the function is numerically rank one
  cfg.selection_grid = 201;
  cfg.diag_grid = 201;
  CHECK_THROWS_AS(run_validate(cfg), InvalidRank);
}

TEST_CASE("the identically zero function is reported as such") {
  RunConfig cfg;
  cfg.builtin_name = "zero";
  cfg.selection_grid = 101;
  cfg.diag_grid = 101;
  CHECK_THROWS_AS(run_validate(cfg), ZeroFunction);
}

TEST_CASE("two identical runs produce byte-identical artifacts") {
  oracles::TempDir dir;
  RunConfig cfg;
  cfg.builtin_name = "paper-f";
  cfg.m = 5;
  cfg.n = 5;
  cfg.selection_grid = 201;
  cfg.diag_grid = 301;

  cfg.out_dir = dir.path() / "first";
  run_decompose(cfg);
  cfg.out_dir = dir.path() / "second";
  run_decompose(cfg);

  for (const char* name : kDecomposeArtifacts) {
    CAPTURE(name);
    CHECK(oracles::read_file(dir.path() / "first" / name) ==
          oracles::read_file(dir.path() / "second" / name));
  }
}

TEST_CASE("rectangular configurations size every table correctly") {
  oracles::TempDir dir;
  RunConfig cfg;
  cfg.builtin_name = "paper-f";
  cfg.m = 3;
  cfg.n = 5;
  cfg.selection_grid = 201;
  cfg.diag_grid = 201;
  cfg.out_dir = dir.path();
  const DecomposeResult res = run_decompose(cfg);
  CHECK(res.rank == 3);

  CHECK(data_rows(oracles::read_file(dir.path() / "lebesgue.csv")) == 3);
  CHECK(data_rows(oracles::read_file(dir.path() / "lebesgue_y.csv")) == 5);
  CHECK(data_rows(oracles::read_file(dir.path() / "errors.csv")) == 3);
  CHECK(data_rows(oracles::read_file(dir.path() / "sigma.csv")) == 3);
  CHECK(oracles::read_file(dir.path() / "phi_k.csv").rfind("t,phi_1,phi_2,phi_3\n", 0) == 0);
  CHECK(oracles::read_file(dir.path() / "psi_k.csv").rfind("t,psi_1,psi_2,psi_3\n", 0) == 0);
}

TEST_CASE("tabulated input runs on its own nodes end to end") {
  oracles::TempDir dir;
  const Grid nodes = make_uniform_grid(make_interval(0.0, 1.0), 9);
  Eigen::MatrixXd values(9, 9);
  for (int i = 0; i < 9; ++i) {
    for (int j = 0; j < 9; ++j) {
      values(i, j) = (1.0 + nodes[static_cast<std::size_t>(i)]) *
                     std::exp(nodes[static_cast<std::size_t>(j)]);
    }
  }
  const auto table = dir.path() / "table.csv";
  write_tabulated_csv(table, nodes.points(), nodes.points(), values);

  RunConfig cfg;
  cfg.tabulated_path = table;
  cfg.m = 2;
  cfg.n = 2;
  cfg.out_dir = dir.path() / "out";
  const DecomposeResult res = run_decompose(cfg);
  CHECK(res.rank == 1);
  CHECK(res.rel_err <= 1e-12);
  CHECK(res.f_sup == values.maxCoeff());
  // Diagnostics grids collapse onto the table nodes.
  CHECK(data_rows(oracles::read_file(dir.path() / "out" / "phi_k.csv")) == 9);
}

TEST_CASE("validate returns the same diagnostics a decompose run writes") {
  oracles::TempDir dir;
  RunConfig cfg;
  cfg.builtin_name = "paper-f";
  cfg.m = 4;
  cfg.n = 4;
  cfg.selection_grid = 201;
  cfg.diag_grid = 201;
  cfg.out_dir = dir.path();
  const DecomposeResult res = run_decompose(cfg);
  const DiagnosticsReport report = run_validate(cfg);
  CHECK(report.all_checks_pass());
  CHECK(report.sup_error_interp == res.report.sup_error_interp);
  CHECK(report.sup_error_lowrank == res.report.sup_error_lowrank);
  CHECK(report.sigma == res.report.sigma);
  CHECK(report.bound_checks.size() == res.report.bound_checks.size());
}

TEST_CASE("the paper reproduction writes its summary and field tables") {
  oracles::TempDir dir;
  const double rel = run_reproduce_paper(dir.path());
  CHECK(rel <= 0.08);
  CHECK(rel >= 0.02);

  std::ifstream in(dir.path() / "summary.json");
  nlohmann::json summary;
  in >> summary;
  CHECK(summary.at("K").get<int>() == 2);
  CHECK(summary.at("m").get<int>() == 10);
  CHECK(summary.at("n").get<int>() == 10);
  CHECK(summary.at("rank2_rel_err").get<double>() == rel);
  CHECK(summary.at("rank3_rel_err").get<double>() <= 0.02);

  const std::string sigma_csv = oracles::read_file(dir.path() / "sigma.csv");
  CHECK(data_rows(sigma_csv) == 10);

  const TabulatedData f_field = read_tabulated_csv(dir.path() / "f_field.csv");
  const TabulatedData err_field = read_tabulated_csv(dir.path() / "error_field.csv");
  CHECK(f_field.x_nodes.size() == 201);
  CHECK(f_field.y_nodes.size() == 201);
  const double f_sup = f_field.values.cwiseAbs().maxCoeff();
  CHECK(err_field.values.cwiseAbs().maxCoeff() <= 0.08 * f_sup);

  for (const char* name : {"q_basis.csv", "s_basis.csv", "approx_field.csv"}) {
    CAPTURE(name);
    CHECK(fs::exists(dir.path() / name));
  }
}
