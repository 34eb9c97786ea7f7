#pragma once

#include "nrd/bsms.hpp"
#include "nrd/kernel.hpp"
#include "nrd/pair_table.hpp"

namespace nrd {

struct SolverOptions {
  double tol = 1e-10;     // max-norm residual on the marginal table
  int max_iter = 10000;
  double damping = 1.0;   // 1.0 = undamped update
};

struct FixedPointResult {
  ReproductionKernel reproduction;
  int iterations = 0;
  double residual = 0.0;
};

/// Exponentially tilts each marginal row by e^{s * rho(x, y)} and
/// renormalizes, producing the reproduction kernel P(y | x, y_prev).
/// Requires s <= 0. Throws DegeneracyError when a tilted row normalizer
/// vanishes.
StochasticKernel tilted_update(const StochasticKernel& marginal, double s,
                               const DistortionSpec& rho);

/// Alternating fixed-point solve for the stationary optimal reproduction at
/// multiplier s: (a) tilt the current marginal, (b) recompute the stationary
/// pair chain it induces, (c) average the kernel over the stationary
/// conditional P(x | y_prev) to get the next marginal. Converged when the
/// marginal residual drops below options.tol in max norm; otherwise throws
/// ConvergenceError carrying the last residual.
FixedPointResult fixed_point_solve(const StochasticKernel& source, const DistortionSpec& rho,
                                   double s, const SolverOptions& options = {});
FixedPointResult fixed_point_solve(const StochasticKernel& source, const DistortionSpec& rho,
                                   double s, const StochasticKernel& initial_marginal,
                                   const SolverOptions& options = {});

/// Rate of a converged fixed point in bits per symbol:
///   R = [s * E(rho) - E ln sum_y e^{s rho(x,y)} marginal(y|y_prev)] / ln 2
/// with both expectations under the stationary law of (X_i, Y_{i-1}).
double nrdf_value(const StochasticKernel& source, const DistortionSpec& rho, double s,
                  const ReproductionKernel& reproduction);

/// Stationary per-symbol information rate E[ I(X_i; Y_i | Y_{i-1} = y) ] of a
/// reproduction pair, in bits. Equals nrdf_value at a converged fixed point;
/// computed by a different route (conditional mutual information) as a check.
double stationary_information_rate(const StochasticKernel& source,
                                   const ReproductionKernel& reproduction);

/// Max-norm residual of the marginal self-consistency condition
/// marginal(y|y_prev) = sum_x P(x|y_prev) kernel(y|x, y_prev) under the
/// stationary pair law.
double reproduction_consistency_residual(const StochasticKernel& source,
                                         const ReproductionKernel& reproduction);

struct BisectionOptions {
  double s_lo = -50.0;
  double d_tol = 1e-8;
  SolverOptions solver;
};

struct SolveResult {
  RdPoint point;
  ReproductionKernel reproduction;
};

/// Finds the multiplier s whose fixed-point solution meets the target
/// stationary distortion, by bisection over [s_lo, 0]; the distortion is
/// monotone nondecreasing in s. Fills RdPoint.m with the stationary
/// P{X_i = Y_{i-1}} and alpha/beta from the solved kernel for binary
/// problems. Throws BracketError when the target lies outside the
/// achievable range.
SolveResult distortion_bisection(const StochasticKernel& source, const DistortionSpec& rho,
                                 double target_D, const BisectionOptions& options = {});

}  // namespace nrd
