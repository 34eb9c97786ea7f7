#pragma once

#include "nrd/kernel.hpp"
#include "nrd/pair_table.hpp"
#include "nrd/pmf.hpp"

namespace nrd {

/// Markov chain over the pair state z = (x, y), z = x * ny + y, driven by a
/// source P(x'|x) and a reproduction kernel P(y'|x', y):
///   T(x', y' | x, y) = P(x'|x) * P(y'|x', y).
StochasticKernel pair_transition(const StochasticKernel& source,
                                 const StochasticKernel& reproduction);

/// Stationary law of the (X_i, Y_{i-1}) pair: w(x', y) = sum_x pi(x, y) P(x'|x),
/// flattened as x' * ny + y. `pair_pi` is the stationary law of pair_transition.
std::vector<double> predecessor_pair_law(const StochasticKernel& source, const Pmf& pair_pi,
                                         int ny);

/// Stationary expectation of rho(X_i, Y_i) under the pair chain.
double stationary_distortion(const StochasticKernel& source,
                             const StochasticKernel& reproduction, const DistortionSpec& rho);

}  // namespace nrd
