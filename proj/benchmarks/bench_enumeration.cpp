#include <benchmark/benchmark.h>

#include "nrd/enumeration.hpp"
#include "nrd/scheme.hpp"

namespace {

void BM_EnumerateJointXY(benchmark::State& state) {
  const nrd::TransmissionScheme scheme = nrd::build_unmatched_scheme(0.25, 0.1);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        nrd::enumerate_joint(scheme, n, {nrd::Var::X, nrd::Var::Y}));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_EnumerateJointXY)->Arg(4)->Arg(6)->Arg(8);

void BM_DirectedInformation(benchmark::State& state) {
  const nrd::TransmissionScheme scheme = nrd::build_unmatched_scheme(0.25, 0.1);
  const nrd::JointTable table =
      nrd::enumerate_joint(scheme, static_cast<int>(state.range(0)),
                           {nrd::Var::X, nrd::Var::Y});
  for (auto _ : state) {
    benchmark::DoNotOptimize(nrd::directed_information(table));
  }
}
BENCHMARK(BM_DirectedInformation)->Arg(4)->Arg(8);

void BM_MarkovChecks(benchmark::State& state) {
  const nrd::TransmissionScheme scheme = nrd::build_matched_scheme(0.25, 0.1, true);
  const nrd::JointTable table = nrd::enumerate_joint(scheme, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nrd::check_markov_chains(table));
  }
}
BENCHMARK(BM_MarkovChecks);

}  // namespace
