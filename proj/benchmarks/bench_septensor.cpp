#include <benchmark/benchmark.h>

#include "septensor/diagnostics.hpp"

namespace {

using namespace septensor;

const FunctionSource& paper_source() {
  static const FunctionSource f = FunctionSource::builtin("paper-f");
  return f;
}

void bm_directional_eim(benchmark::State& state) {
  const FunctionSource& f = paper_source();
  const int rank = static_cast<int>(state.range(0));
  const EimConfig cfg = make_eim_config(f, Direction::x, rank, 401);
  for (auto _ : state) {
    DirectionalBasis b = run_directional_eim(f, Direction::x, cfg);
    benchmark::DoNotOptimize(b.coeffs.data());
  }
}
BENCHMARK(bm_directional_eim)->Arg(5)->Arg(10);

void bm_svd(benchmark::State& state) {
  const FunctionSource& f = paper_source();
  const EimConfig cfg_x = make_eim_config(f, Direction::x, 10, 401);
  const EimConfig cfg_y = make_eim_config(f, Direction::y, 10, 401);
  const TensorInterpolant t = build_tensor_interpolant(
      f, run_directional_eim(f, Direction::x, cfg_x), run_directional_eim(f, Direction::y, cfg_y));
  for (auto _ : state) {
    SvdFactors factors = svd_decompose(t.collocation);
    benchmark::DoNotOptimize(factors.sigma.data());
  }
}
BENCHMARK(bm_svd);

void bm_grid_sweep(benchmark::State& state) {
  const FunctionSource& f = paper_source();
  const EimConfig cfg_x = make_eim_config(f, Direction::x, 10, 401);
  const EimConfig cfg_y = make_eim_config(f, Direction::y, 10, 401);
  const TensorInterpolant t = build_tensor_interpolant(
      f, run_directional_eim(f, Direction::x, cfg_x), run_directional_eim(f, Direction::y, cfg_y));
  const std::size_t side = static_cast<std::size_t>(state.range(0));
  const Grid gx = make_uniform_grid(f.domain_x(), side);
  const Grid gy = make_uniform_grid(f.domain_y(), side);
  for (auto _ : state) {
    Eigen::MatrixXd values = t.values_on_grids(gx, gy);
    benchmark::DoNotOptimize(values.data());
  }
}
BENCHMARK(bm_grid_sweep)->Arg(201)->Arg(1001);

}  // namespace

BENCHMARK_MAIN();
