// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "hkmod/fujiki.hpp"
#include "hkmod/gen.hpp"
#include "hkmod/kernels.hpp"

using namespace hkmod;

namespace {

PairingOracle random_oracle(std::size_t count) {
  Rng rng(3);
  std::vector<std::vector<Rational>> q(count, std::vector<Rational>(count));
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i; j < count; ++j) q[i][j] = q[j][i] = Rational(rng.uniform(-3, 3));
  }
  return [q](std::size_t i, std::size_t j) { return q[i][j]; };
}

void BM_matchings_parallel(benchmark::State& state) {
  const auto count = static_cast<std::size_t>(state.range(0));
  const PairingOracle q = random_oracle(count);
  for (auto _ : state) benchmark::DoNotOptimize(matchings_sum(count, q));
}

void BM_matchings_serial(benchmark::State& state) {
  const auto count = static_cast<std::size_t>(state.range(0));
  const PairingOracle q = random_oracle(count);
  for (auto _ : state) benchmark::DoNotOptimize(reference::matchings_sum(count, q));
}

void BM_walls_parallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep_walls(2, 20, state.range(0), 40));
}

void BM_walls_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reference::sweep_walls(2, 20, state.range(0), 40));
}

void BM_econ_parallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep_econ(state.range(0), 2000));
}

void BM_econ_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reference::sweep_econ(state.range(0), 2000));
}

}  // namespace

BENCHMARK(BM_matchings_parallel)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_matchings_serial)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_walls_parallel)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_walls_serial)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_econ_parallel)->Arg(12)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_econ_serial)->Arg(12)->Arg(48)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
