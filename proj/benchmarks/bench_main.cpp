#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "lcmf/analytics.hpp"
#include "lcmf/pif.hpp"
#include "lcmf/primes.hpp"
#include "lcmf/qtriangle.hpp"
#include "lcmf/rhosigma.hpp"

namespace {

using namespace lcmf;

void BM_PrimeTable(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    PrimeTable table(limit);
    benchmark::DoNotOptimize(table.pi(static_cast<double>(limit)));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PrimeTable)->Arg(1 << 16)->Arg(1 << 20)->Arg(1 << 24)->Unit(benchmark::kMillisecond);

void BM_Sigma(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  shared_primes(n + 1);
  for (auto _ : state) benchmark::DoNotOptimize(sigma(n));
}
BENCHMARK(BM_Sigma)->Arg(1'000)->Arg(100'000)->Arg(10'000'000)->Unit(benchmark::kMicrosecond);

void BM_Rho(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  shared_primes(n + 1);
  for (auto _ : state) benchmark::DoNotOptimize(rho(n));
}
BENCHMARK(BM_Rho)->Arg(1'000)->Arg(100'000)->Arg(10'000'000)->Unit(benchmark::kMicrosecond);

// x is in tenths so the argument stays integral.
void BM_LcmOracle(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0)) / 10;
  for (auto _ : state) benchmark::DoNotOptimize(lcm_oracle(WeightFunction::linear(), x));
}
BENCHMARK(BM_LcmOracle)->Arg(100)->Arg(150)->Arg(180)->Unit(benchmark::kMillisecond);

void BM_Triangle(benchmark::State& state) {
  const auto nmax = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_triangle(nmax));
}
BENCHMARK(BM_Triangle)->Arg(7)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_ScanChunk(benchmark::State& state) {
  const auto steps = static_cast<std::uint64_t>(state.range(0));
  constexpr std::uint64_t kStart = std::uint64_t{1} << 20;
  shared_factor_sieve(kStart + steps + 1);
  shared_primes(kStart + steps + 2);
  std::vector<std::uint64_t> scratch;
  for (auto _ : state) {
    auto s = seed_state(kStart);
    for (std::uint64_t i = 0; i < steps; ++i) advance_state(s, scratch);
    benchmark::DoNotOptimize(s.s1);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ScanChunk)->Arg(1 << 12)->Arg(1 << 16)->Unit(benchmark::kMillisecond);

void BM_ConstantEnclosure(benchmark::State& state) {
  const auto x = static_cast<double>(state.range(0));
  shared_primes(static_cast<std::uint64_t>(x));
  for (auto _ : state) benchmark::DoNotOptimize(constant_c(x));
}
BENCHMARK(BM_ConstantEnclosure)->Arg(1'000'000)->Arg(10'000'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
