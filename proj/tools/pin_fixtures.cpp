// Prints the regression fixture header for the default reference run to
// stdout. Redirect into tests/fixtures/regression_fixtures.hpp after an
// intentional change to the algorithm or its defaults.

#include <iostream>
#include <string>
#include <vector>

#include "septensor/diagnostics.hpp"
#include "septensor/numfmt.hpp"

namespace {

void print_array(const std::string& name, const std::vector<double>& values) {
  std::cout << "inline constexpr double " << name << "[" << values.size() << "] = {\n";
  for (double v : values) std::cout << "    " << septensor::format_double(v) << ",\n";
  std::cout << "};\n";
}

}  // namespace

int main() {
  using namespace septensor;
  const FunctionSource f = FunctionSource::builtin("paper-f");
  const EimConfig cfg_x = make_eim_config(f, Direction::x, 10, 401);
  const EimConfig cfg_y = make_eim_config(f, Direction::y, 10, 401);
  const Grid diag_x = make_uniform_grid(f.domain_x(), 1001);
  const Grid diag_y = make_uniform_grid(f.domain_y(), 1001);

  const RankSweep sweep = run_rank_sweep(f, cfg_x, cfg_y, diag_x, diag_y);
  const DirectionalBasis basis_x = run_directional_eim(f, Direction::x, cfg_x);
  const DirectionalBasis basis_y = run_directional_eim(f, Direction::y, cfg_y);
  const TensorInterpolant t = build_tensor_interpolant(f, basis_x, basis_y);
  const SvdFactors factors = svd_decompose(t.collocation);
  const std::vector<double> sigma(factors.sigma.data(),
                                  factors.sigma.data() + factors.sigma.size());

  std::cout << "#pragma once\n\n";
  std::cout << "// Reference values for the default run of the builtin \"paper-f\"\n";
  std::cout << "// (m = n = 10, selection grid 401, diagnostics grid 1001 per direction).\n";
  std::cout << "// Regenerated by the pin_fixtures tool; tests compare at 1e-10 relative.\n\n";
  std::cout << "namespace septensor::fixtures {\n\n";
  print_array("kInterpSupError", sweep.interp_sup_error);
  std::cout << "\n";
  print_array("kSingularValues", sigma);
  std::cout << "\n";
  print_array("kLebesgueX", sweep.lebesgue_x);
  std::cout << "\n";
  print_array("kLebesgueY", sweep.lebesgue_y);
  std::cout << "\n}  // namespace septensor::fixtures\n";
  return 0;
}
