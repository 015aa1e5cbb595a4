#include <cmath>
#include <random>

#include <benchmark/benchmark.h>

#include "frenetbv/curvegeom.hpp"
#include "frenetbv/liegroup.hpp"
#include "frenetbv/solver.hpp"

using namespace frenetbv;

namespace {

SkewPath case_datum() {
  return SkewPath::frenet(BVScalar::affine(2.0, -1.0, 1.0, {{1.0, 1.0}}), BVScalar::affine(2.0, 0.0, 0.0, {{1.0, 1.0}}));
}

void BM_Rodrigues(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  std::vector<AxisAngle> inputs;
  for (int i = 0; i < 256; ++i) inputs.emplace_back(Vector3(g(rng), g(rng), g(rng)).normalized(), g(rng));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rodrigues_exp(inputs[i++ & 255]));
  }
}
BENCHMARK(BM_Rodrigues);

void BM_SolveBV(benchmark::State& state) {
  const SkewPath datum = case_datum();
  SolverConfig cfg;
  cfg.grid = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_bv(datum, RotationMatrix::identity(3), cfg));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveBV)->RangeMultiplier(4)->Range(256, 16384)->Unit(benchmark::kMillisecond)->Complexity();

void BM_DiscreteFrechet(benchmark::State& state) {
  const SkewPath datum = case_datum();
  SolverConfig cfg;
  cfg.grid = static_cast<int>(state.range(0));
  const Curve a = integrate_tangent(solve_bv(datum, RotationMatrix::identity(3), cfg), true);
  const Curve b = integrate_tangent(solve_mollified_oracle(datum, 0.05, RotationMatrix::identity(3), cfg), true);
  for (auto _ : state) {
    benchmark::DoNotOptimize(discrete_frechet(a, b));
  }
}
BENCHMARK(BM_DiscreteFrechet)->RangeMultiplier(2)->Range(256, 2048)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
