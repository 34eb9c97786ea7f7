#pragma once

#include <optional>

#include "nrd/kernel.hpp"
#include "nrd/pmf.hpp"
#include "nrd/scheme.hpp"

namespace nrd {

/// Markov chain over the pair z = (x, y) induced by a scheme, with its
/// stationary law and stationary expectations. z = x * ny + y.
struct JointChain {
  StochasticKernel transition;
  Pmf stationary;
  double expected_distortion = 0.0;
  std::optional<double> expected_cost;
  int nx = 0;
  int ny = 0;

  int state(int x, int y) const { return x * ny + y; }
};

/// Builds the (X_i, Y_i) chain of a scheme whose composition reduces to a
/// P(y | x, y_prev) dependence (identity decoder; StructureError otherwise).
/// expected_cost is filled when the scheme carries a cost table and is the
/// stationary expectation of c(X_i, Y_{i-1}).
JointChain joint_chain(const TransmissionScheme& scheme);

}  // namespace nrd
