// Serial reference against the OpenMP kernels.

#include "corelat/atomic.hpp"
#include "corelat/cores.hpp"
#include "corelat/diophantine.hpp"
#include "corelat/param.hpp"

#include <benchmark/benchmark.h>

using namespace corelat;

namespace {

Exec mode(const benchmark::State& state) { return state.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_points_in_range(benchmark::State& state) {
  IntQuadratic q{{{3, 1, 0, 0}, {1, 3, 1, 0}, {0, 1, 3, 1}, {0, 0, 1, 3}}, {1, -2, 0, 1}, 0};
  for (auto _ : state) benchmark::DoNotOptimize(points_in_range(q, 0, 400, mode(state)));
}
BENCHMARK(BM_points_in_range)->Arg(0)->Arg(1);

void BM_enumerate_atomic(benchmark::State& state) {
  auto t = lookup_type("C4_1");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_atomic(t, 0, 120, LatticeKind::M, mode(state)));
}
BENCHMARK(BM_enumerate_atomic)->Arg(0)->Arg(1);

void BM_solve_diagonal(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(solve_diagonal({{1, 2, 3}}, 48 * 400 + 30, mode(state)));
}
BENCHMARK(BM_solve_diagonal)->Arg(0)->Arg(1);

void BM_cores_by_charge(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cores_by_charge(200, 6, mode(state)));
}
BENCHMARK(BM_cores_by_charge)->Arg(0)->Arg(1);

void BM_sweep(benchmark::State& state) {
  auto c = make_case("D3t");
  for (auto _ : state) benchmark::DoNotOptimize(sweep(c, 60, mode(state)));
}
BENCHMARK(BM_sweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
