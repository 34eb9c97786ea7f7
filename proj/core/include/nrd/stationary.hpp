#pragma once

#include "nrd/kernel.hpp"
#include "nrd/pmf.hpp"

namespace nrd {

/// Stationary distribution pi = pi * K of a one-step transition kernel
/// (condition arity 1, square), found by a direct linear solve with the
/// normalization constraint.
///
/// Throws ShapeError for non-square kernels and MultiplicityError when the
/// stationary distribution is not unique. The result satisfies
/// ||pi * K - pi||_inf <= 1e-12.
Pmf stationary_distribution(const StochasticKernel& kernel);

}  // namespace nrd
