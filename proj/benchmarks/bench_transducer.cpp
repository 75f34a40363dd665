#include <random>

#include <benchmark/benchmark.h>

#include "kspm/transducer.hpp"
#include "kspm/words.hpp"

namespace {

kspm::Word random_word(std::size_t length, int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> letter(0, d - 2);
  kspm::Word u(length);
  for (auto& x : u) x = static_cast<kspm::Letter>(letter(rng));
  return u;
}

void BM_BuildMachine(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kspm::build_machine(d).state_count());
  }
}
BENCHMARK(BM_BuildMachine)->DenseRange(3, 5);

void BM_Run(benchmark::State& state) {
  const auto machine = kspm::build_machine(3);
  const auto u = random_word(static_cast<std::size_t>(state.range(0)), 3, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(machine.run(u).output.size());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Run)->Arg(1000)->Arg(100000);

void BM_WaveSteps(benchmark::State& state) {
  const auto machine = kspm::build_machine(3, kspm::OutputMode::FigureSuppressed);
  const auto u = random_word(static_cast<std::size_t>(state.range(0)), 3, 12);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kspm::wave_steps(machine, u));
  }
}
BENCHMARK(BM_WaveSteps)->Arg(5000);


}  // namespace
