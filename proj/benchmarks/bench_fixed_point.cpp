#include <benchmark/benchmark.h>

#include "kspm/avalanche.hpp"
#include "kspm/dynamics.hpp"
#include "kspm/wave.hpp"

namespace {

void BM_FixedPoint(benchmark::State& state) {
  const kspm::ModelParams params(static_cast<int>(state.range(0)));
  const auto n = static_cast<std::uint64_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kspm::fixed_point(params, n));
  }
  state.SetItemsProcessed(state.iterations() * state.range(1));
}
BENCHMARK(BM_FixedPoint)->Args({3, 1000})->Args({3, 10000})->Args({4, 10000})->Args({5, 10000});

void BM_RecordAvalanches(benchmark::State& state) {
  const kspm::ModelParams params(3);
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto log = kspm::record_avalanches(params, n);
    benchmark::DoNotOptimize(kspm::long_avalanches(log).indices.size());
  }
}
BENCHMARK(BM_RecordAvalanches)->Arg(1000)->Arg(10000);

void BM_WaveMatch(benchmark::State& state) {
  const kspm::ModelParams params(3);
  const auto pi = kspm::fixed_point(params, static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kspm::wave_match(pi, params).start);
  }
}
BENCHMARK(BM_WaveMatch)->Arg(10000)->Arg(100000);

void BM_TheoremSweep(benchmark::State& state) {
  const kspm::ModelParams params(3);
  const auto envelope = kspm::calibrated_envelope(params);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        kspm::theorem_sweep(params, static_cast<std::uint64_t>(state.range(0)), envelope).matched);
  }
}
BENCHMARK(BM_TheoremSweep)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace
