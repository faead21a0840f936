#include <CLI11.hpp>
#include <exception>
#include <iostream>
#include <string>

#include "septensor/errors.hpp"
#include "septensor/numfmt.hpp"
#include "septensor/pipeline.hpp"

namespace {

int exit_code_for(septensor::errc code) {
  switch (code) {
    case septensor::errc::zero_function:
      return 4;
    case septensor::errc::domain_error:
    case septensor::errc::unsupported_off_grid:
    case septensor::errc::numeric_error:
      return 3;
    default:
      return 2;
  }
}

void add_run_options(CLI::App* cmd, septensor::RunConfig& cfg, std::string& tabulated) {
  cmd->add_option("--builtin", cfg.builtin_name, "name of a builtin function");
  cmd->add_option("--function-expr", cfg.expression, "expression in x and y");
  cmd->add_option("--tabulated", tabulated, "CSV table of samples (header x\\y)");
  cmd->add_option("--xmin", cfg.xmin, "left edge of the x domain");
  cmd->add_option("--xmax", cfg.xmax, "right edge of the x domain");
  cmd->add_option("--ymin", cfg.ymin, "left edge of the y domain");
  cmd->add_option("--ymax", cfg.ymax, "right edge of the y domain");
  cmd->add_option("--m", cfg.m, "greedy rank in x");
  cmd->add_option("--n", cfg.n, "greedy rank in y");
  cmd->add_option("--K", cfg.K, "truncation rank (default: numerical rank)");
  cmd->add_option("--selection-grid", cfg.selection_grid, "points per direction for pivot search");
  cmd->add_option("--diag-grid", cfg.diag_grid, "points per direction for error measurement");
  cmd->add_option("--out", cfg.out_dir, "output directory");
  cmd->add_flag("--verbose", cfg.verbose, "log greedy iterations to standard error");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Separable low-rank approximation of bivariate functions"};
  app.footer("The environment variable SEPTENSOR_SEEDLESS is accepted and ignored:\n"
             "every run is deterministic, so there is no seed to suppress.");
  app.require_subcommand(1);

  septensor::RunConfig cfg;
  std::string tabulated;

  CLI::App* decompose =
      app.add_subcommand("decompose", "build the interpolant and surrogate, write all artifacts");
  add_run_options(decompose, cfg, tabulated);

  CLI::App* reproduce = app.add_subcommand(
      "reproduce-paper", "rerun the reference experiment and export every figure's data");
  reproduce->add_option("--out", cfg.out_dir, "output directory");
  reproduce->add_flag("--verbose", cfg.verbose, "log greedy iterations to standard error");

  CLI::App* validate =
      app.add_subcommand("validate", "run every bound check and fail if any is violated");
  add_run_options(validate, cfg, tabulated);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  cfg.tabulated_path = tabulated;

  std::ostream* log = cfg.verbose ? &std::cerr : nullptr;
  try {
    if (decompose->parsed()) {
      const septensor::DecomposeResult res = septensor::run_decompose(cfg, log);
      std::cout << "rank=" << res.rank << " relerr=" << septensor::format_double(res.rel_err)
                << "\n";
      return 0;
    }
    if (reproduce->parsed()) {
      const double rel_err = septensor::run_reproduce_paper(cfg.out_dir, log);
      std::cout << "rank=2 relerr=" << septensor::format_double(rel_err) << "\n";
      return 0;
    }
    const septensor::DiagnosticsReport report = septensor::run_validate(cfg, log);
    int verified = 0;
    int failed = 0;
    for (const septensor::BoundCheck& check : report.bound_checks) {
      if (!check.pass.has_value()) continue;
      ++verified;
      if (!*check.pass) {
        ++failed;
        std::cerr << "failed: " << check.name << " index=" << check.index
                  << " lhs=" << septensor::format_double(check.lhs)
                  << " rhs=" << septensor::format_double(check.rhs) << "\n";
      }
    }
    std::cout << "checks: " << verified << " verified, " << failed << " failed\n";
    return failed == 0 ? 0 : 1;
  } catch (const septensor::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
