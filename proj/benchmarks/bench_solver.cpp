#include <benchmark/benchmark.h>

#include <cmath>

#include "nrd/bsms.hpp"
#include "nrd/pair_table.hpp"
#include "nrd/solver.hpp"

namespace {

const nrd::DistortionSpec kHamming = nrd::PairTable::hamming(2);

void BM_FixedPointSolve(benchmark::State& state) {
  const nrd::StochasticKernel source = nrd::BsmsSource(0.25).transition();
  const double s = std::log(0.1 / 0.9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nrd::fixed_point_solve(source, kHamming, s));
  }
}
BENCHMARK(BM_FixedPointSolve);

void BM_DistortionBisection(benchmark::State& state) {
  const nrd::StochasticKernel source = nrd::BsmsSource(0.25).transition();
  for (auto _ : state) {
    benchmark::DoNotOptimize(nrd::distortion_bisection(source, kHamming, 0.1));
  }
}
BENCHMARK(BM_DistortionBisection);

void BM_BsmsClosedForm(benchmark::State& state) {
  const nrd::BsmsSource source(0.25);
  double d = 0.02;
  for (auto _ : state) {
    benchmark::DoNotOptimize(nrd::bsms_nrdf(source, d));
    d = d < 0.48 ? d + 0.001 : 0.02;
  }
}
BENCHMARK(BM_BsmsClosedForm);

}  // namespace
