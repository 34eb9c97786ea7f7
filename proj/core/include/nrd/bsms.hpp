#pragma once

#include <limits>

#include "nrd/kernel.hpp"

namespace nrd {

/// Binary symmetric Markov source: consecutive symbols flip with
/// probability p. Degenerate endpoints p in {0, 1} are rejected.
class BsmsSource {
 public:
  explicit BsmsSource(double p);

  double p() const { return p_; }

  /// One-step transition kernel P(x_i | x_{i-1}).
  StochasticKernel transition() const;

 private:
  double p_;
};

/// One solved point of the nonanticipative rate-distortion curve.
///
/// s is the Lagrange multiplier on natural-log scale (s <= 0); rates are in
/// bits per symbol. m/alpha/beta are the binary-source derived quantities
/// and are NaN when the solve does not expose them.
struct RdPoint {
  double D = 0.0;
  double R = 0.0;
  double s = 0.0;
  double m = std::numeric_limits<double>::quiet_NaN();
  double alpha = std::numeric_limits<double>::quiet_NaN();
  double beta = std::numeric_limits<double>::quiet_NaN();
};

/// Optimal causal reproduction pair: the conditional kernel
/// P*(y_i | x_i, y_{i-1}) and its own induced marginal P*(y_i | y_{i-1}).
struct ReproductionKernel {
  StochasticKernel kernel;    // conditions (x, y_prev)
  StochasticKernel marginal;  // conditions (y_prev)
};

/// Closed-form nonanticipative RDF for a BSMS(p) under Hamming distortion:
/// R = H(m) - H(D) for D <= 1/2 with m = 1 - p - D + 2pD, and R = 0 above.
/// alpha = (1-p)(1-D)/m, beta = p(1-D)/(p+D-2pD), s = ln(D/(1-D)) on the
/// curved branch and 0 on the zero-rate branch.
/// Throws std::domain_error unless 0 < D <= 1.
RdPoint bsms_nrdf(const BsmsSource& source, double D);

/// Optimal reproduction kernel for the BSMS(p) point (closed form):
///   P*(0 | x=0, yp=0) = alpha   P*(0 | x=0, yp=1) = beta
///   P*(1 | x=1, yp=0) = beta    P*(1 | x=1, yp=1) = alpha
/// The induced marginal P*(y | y_prev) is the BSMS(p) transition itself.
/// Throws std::domain_error unless 0 < D <= 1/2.
ReproductionKernel bsms_reproduction_kernel(const BsmsSource& source, double D);

}  // namespace nrd
