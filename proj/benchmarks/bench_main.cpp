#include <benchmark/benchmark.h>

#include <numbers>

#include "slheat/continuation.hpp"
#include "slheat/diagnostics.hpp"
#include "slheat/initial_data.hpp"
#include "slheat/picard.hpp"
#include "slheat/semigroup.hpp"

using namespace slheat;

namespace {

const double kTwoPi = 2.0 * std::numbers::pi;

void BM_ForwardInverse(benchmark::State& state) {
  const GridSpec g(kTwoPi, static_cast<int>(state.range(0)));
  const auto f = random_field(g, 1.0, 1);
  for (auto _ : state) {
    auto out = from_spectral(to_spectral(f));
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g.size()));
}
BENCHMARK(BM_ForwardInverse)->Arg(16)->Arg(32)->Arg(64);

void BM_ApplySemigroup(benchmark::State& state) {
  const GridSpec g(kTwoPi, static_cast<int>(state.range(0)));
  const auto f = random_field(g, 1.0, 2);
  for (auto _ : state) {
    auto out = apply_semigroup(f, 0.01);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_ApplySemigroup)->Arg(16)->Arg(32)->Arg(64);

void BM_DuhamelApply(benchmark::State& state) {
  const GridSpec g(kTwoPi, static_cast<int>(state.range(0)));
  const int m = static_cast<int>(state.range(1));
  const auto u0 = make_initial(InitialData::gaussian_bump(5.0, 0.8), g);
  const auto op = DuhamelOperator::from_initial(u0, 0.01, m, 1.0);
  const auto& u = op.free_trajectory();
  for (auto _ : state) {
    auto out = op.apply(u);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_DuhamelApply)->Args({16, 8})->Args({32, 8})->Args({32, 32});

void BM_EnergyFunctionals(benchmark::State& state) {
  const GridSpec g(kTwoPi, static_cast<int>(state.range(0)));
  const auto f = random_smooth_field(g, 1.0, 3, 4);
  for (auto _ : state) benchmark::DoNotOptimize(energy_functionals(f, 1.0));
}
BENCHMARK(BM_EnergyFunctionals)->Arg(32);

void BM_GlobalSolve(benchmark::State& state) {
  const GridSpec g(kTwoPi, static_cast<int>(state.range(0)));
  const auto u0 = make_initial(InitialData::gaussian_bump(5.0, 0.8), g);
  GlobalOptions o;
  o.rho = 1.0;
  o.t_max = 0.1;
  o.holder = false;
  for (auto _ : state) {
    auto r = global_solve(u0, o);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_GlobalSolve)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
