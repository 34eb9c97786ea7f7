#pragma once

#include <optional>
#include <vector>

namespace nrd {

/// Inputs of the Hoeffding-type excess-distortion bound for a uniformly
/// ergodic chain: minorization constant lambda, sup norm of the per-symbol
/// distortion f_norm, bound constant m_h, excess margin delta, horizon n.
/// The displayed bound is valid only for n > 2 f_norm m_h / (lambda delta).
struct BoundParams {
  double lambda = 0.0;
  double f_norm = 1.0;
  double m_h = 1.0;
  double delta = 0.0;
  long long n = 0;

  void validate() const;
  long long validity_threshold() const;  // smallest valid n is threshold + 1
};

/// exp( -lambda^2 ((n+1) delta - 2 f m / lambda)^2 / (2 (n+1) f^2 m^2) ),
/// clamped to [0, 1]; nullopt when n is at or below the validity threshold.
std::optional<double> hoeffding_bound(const BoundParams& params);

/// lambda = min{p, 1-p} * min{alpha, beta, 1-alpha, 1-beta}.
double bsms_minorization_lambda(double p, double alpha, double beta);

struct BoundPoint {
  long long n = 0;
  double lambda = 0.0;
  std::optional<double> bound;
};

/// Pointwise bound over an ascending horizon grid for the BSMS(p) scheme at
/// distortion D; lambda is derived from the closed-form alpha, beta.
std::vector<BoundPoint> bound_curve(double p, double D, double delta,
                                    const std::vector<long long>& n_grid);

}  // namespace nrd
