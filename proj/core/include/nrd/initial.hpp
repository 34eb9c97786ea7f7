#pragma once

#include <vector>

#include "nrd/scheme.hpp"

namespace nrd {

enum class InitPolicy { fixed, stationary };

/// Distribution of the step-0 conditioning triple (x_{-1}, b_{-1}, y_{-1}).
/// Shared by exact enumeration and Monte Carlo simulation so both see the
/// same initial law.
struct InitialConditions {
  int nx = 0;
  int nb = 0;
  int ny = 0;
  std::vector<double> weights;  // dense over (x, b, y)

  double at(int x, int b, int y) const {
    return weights[(static_cast<std::size_t>(x) * nb + b) * ny + y];
  }

  /// x_{-1} drawn from the stationary source marginal; b_{-1} = y_{-1} =
  /// y_prev (default 0).
  static InitialConditions fixed_state(const TransmissionScheme& scheme, int y_prev = 0);

  /// (x_{-1}, y_{-1}) drawn from the stationary pair law of the scheme's
  /// joint chain, with b_{-1} = y_{-1}. Makes the (X, Y) process stationary
  /// from step 0.
  static InitialConditions stationary_pair(const TransmissionScheme& scheme);

  static InitialConditions from_policy(const TransmissionScheme& scheme, InitPolicy policy,
                                       int y_prev = 0);
};

}  // namespace nrd
