#pragma once

#include <string>
#include <vector>

namespace nrd {

/// One evaluation of the two-state symmetric channel capacity under an
/// expected-cost constraint kappa.
struct CapacityPoint {
  double kappa = 0.0;
  double C = 0.0;      // bits per symbol
  double alpha = 0.0;  // crossover complement of the costly sub-channel
  double beta = 0.0;   // crossover complement of the free sub-channel
};

/// Source/channel matching check at one (p, D) point.
struct MatchingReport {
  double p = 0.0;
  double D = 0.0;
  double m = 0.0;    // matched cost level kappa = m
  double R = 0.0;    // nonanticipative RDF, bits
  double C = 0.0;    // constrained capacity at kappa = m, bits
  double gap = 0.0;  // |R - C|, bits
  bool matched = false;

  static constexpr double kTolerance = 1e-9;
};

/// Capacity of the two-sub-channel symmetric channel with cost level kappa:
///   C = H(beta (1-kappa) + (1-alpha) kappa) - kappa H(alpha) - (1-kappa) H(beta).
/// Inputs must lie in [0, 1]. Negative round-off above -1e-14 is clamped to 0.
CapacityPoint constrained_capacity(double alpha, double beta, double kappa);

/// Evaluates R = H(m) - H(D) against the capacity at the matched cost level
/// kappa = m = 1 - p - D + 2pD, using the closed-form alpha, beta.
MatchingReport match_source_to_channel(double p, double D);

std::vector<CapacityPoint> capacity_curve(double alpha, double beta,
                                          const std::vector<double>& kappa_grid);

/// JSON rendering of a MatchingReport (stable field names, 17 significant
/// digits).
std::string to_json_string(const MatchingReport& report);

}  // namespace nrd
