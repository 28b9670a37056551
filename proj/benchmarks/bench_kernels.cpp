#include <benchmark/benchmark.h>

#include "ffhk/lattice_sum.hpp"
#include "ffhk/special.hpp"
#include "ffhk/twistor.hpp"

namespace {

void BM_BesselK0(benchmark::State& state) {
  const double x = state.range(0) / 10.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ffhk::special::bessel_k0(x));
  }
}
BENCHMARK(BM_BesselK0)->Arg(5)->Arg(80)->Arg(300);

void BM_RegularizedThetaSum(benchmark::State& state) {
  const double rho = state.range(0) / 100.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ffhk::regularized_theta_sum(rho, 0.37));
  }
}
BENCHMARK(BM_RegularizedThetaSum)->Arg(5)->Arg(50)->Arg(300);

void BM_GmnCorrection(benchmark::State& state) {
  const ffhk::BasePoint c{0.01 * state.range(0), 0.1, ffhk::Chart::Principal};
  const ffhk::ModelParams params{1.0, 0.9};
  const ffhk::Complex zeta = 0.8 * std::exp(ffhk::Complex{0.0, std::arg(c.c()) + 1.1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(ffhk::twistor::gmn_correction(c, 0.9, params, zeta));
  }
}
BENCHMARK(BM_GmnCorrection)->Arg(10)->Arg(30)->Arg(60);

}  // namespace

BENCHMARK_MAIN();
