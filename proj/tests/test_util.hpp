#pragma once

#include <vector>

#include "nrd/kernel.hpp"
#include "nrd/pmf.hpp"
#include "nrd/rng.hpp"

namespace nrd::test {

inline double uniform_in(Xoshiro256pp& rng, double lo, double hi) {
  return lo + (hi - lo) * rng.next_unit();
}

inline Pmf random_pmf(Xoshiro256pp& rng, int size) {
  std::vector<double> p(static_cast<std::size_t>(size));
  double sum = 0.0;
  for (double& v : p) {
    v = rng.next_unit() + 1e-6;
    sum += v;
  }
  for (double& v : p) v /= sum;
  // Force exact normalization so property tests are not dominated by setup error.
  double s2 = 0.0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) s2 += p[i];
  p.back() = 1.0 - s2;
  return Pmf(std::move(p));
}

inline StochasticKernel random_square_kernel(Xoshiro256pp& rng, int size) {
  StochasticKernel k({size}, size);
  for (int r = 0; r < size; ++r) k.set_row(r, random_pmf(rng, size).values());
  return k;
}

}  // namespace nrd::test
