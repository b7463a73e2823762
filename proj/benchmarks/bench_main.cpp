#include "ferrand/cohomology.hpp"
#include "ferrand/doubling.hpp"
#include "ferrand/groebner.hpp"
#include "ferrand/ideal.hpp"
#include "ferrand/resolution.hpp"
#include "ferrand/rnc.hpp"

#include <benchmark/benchmark.h>

using namespace ferrand;

namespace {

void BM_BuchbergerSquaredRnc(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  auto gens = power(rnc_ideal(r, r), 2).generators();
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens).size());
}
BENCHMARK(BM_BuchbergerSquaredRnc)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_DoubleIdeal(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  auto mu = random_mu(3, 4, a, 7);
  for (auto _ : state) benchmark::DoNotOptimize(double_ideal(mu).ideal().generators().size());
}
BENCHMARK(BM_DoubleIdeal)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_ResolveOddConic(benchmark::State& state) {
  Ideal x = odd_conic_ideal(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(free_resolution(x).length());
}
BENCHMARK(BM_ResolveOddConic)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_NormalSheafOddConic(benchmark::State& state) {
  Ideal x = odd_conic_ideal(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(h0_normal_sheaf(x).h0);
}
BENCHMARK(BM_NormalSheafOddConic)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
