#include <benchmark/benchmark.h>

#include "nrd/scheme.hpp"
#include "nrd/simulate.hpp"

namespace {

void BM_SimulateTrials(benchmark::State& state) {
  const nrd::TransmissionScheme scheme = nrd::build_matched_scheme(0.25, 0.1, false);
  nrd::SimConfig config;
  config.n = 100;
  config.trials = state.range(0);
  config.seed = 1;
  config.threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(nrd::simulate_trials(scheme, config));
  }
  state.SetItemsProcessed(state.iterations() * config.trials * (config.n + 1));
}
BENCHMARK(BM_SimulateTrials)->Args({10000, 1})->Args({10000, 4})->Args({100000, 4});

}  // namespace
