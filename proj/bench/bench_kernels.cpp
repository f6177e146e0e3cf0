#include <benchmark/benchmark.h>

#include "halphen/qseries.hpp"
#include "halphen/verify.hpp"

using namespace halphen;

static void BM_mul_serial(benchmark::State& state) {
  const auto a = theta_series(3, static_cast<int>(state.range(0)));
  const auto b = eisenstein_series(2, static_cast<int>(state.range(0)) / 8).in_w();
  for (auto _ : state) {
    benchmark::DoNotOptimize(mul_serial(a, b));
  }
}

static void BM_mul_parallel(benchmark::State& state) {
  const auto a = theta_series(3, static_cast<int>(state.range(0)));
  const auto b = eisenstein_series(2, static_cast<int>(state.range(0)) / 8).in_w();
  for (auto _ : state) {
    benchmark::DoNotOptimize(mul_parallel(a, b));
  }
}

static void BM_gauss_manin_sweep(benchmark::State& state) {
  const auto backend = state.range(0) ? verify::Backend::parallel : verify::Backend::serial;
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify::gauss_manin_sweep(400, 7, backend));
  }
  state.SetLabel(state.range(0) ? "parallel" : "serial");
}

BENCHMARK(BM_mul_serial)->Arg(200)->Arg(800)->Arg(1600);
BENCHMARK(BM_mul_parallel)->Arg(200)->Arg(800)->Arg(1600);
BENCHMARK(BM_gauss_manin_sweep)->Arg(0)->Arg(1);

BENCHMARK_MAIN();
