#pragma once

#include "nrd/pmf.hpp"

namespace nrd {

/// Single-letter (horizon 0) rate-distortion value for a binary marginal
/// under Hamming distortion: minimizes I(X; Y) over the two-parameter
/// test-channel simplex subject to expected distortion <= D, by dense grid
/// search refined with a shrinking local grid. Oracle-grade, not fast.
///
/// grid_points is the number of samples per axis on the initial pass.
/// Throws std::domain_error when D is infeasible (D <= 0).
double brute_force_rdf_n0(const Pmf& marginal, double D, int grid_points = 2001);

}  // namespace nrd
