#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nrd/initial.hpp"
#include "nrd/scheme.hpp"

namespace nrd {

struct SimConfig {
  int n = 0;                    // symbols per trial minus one (horizon)
  long long trials = 1;
  std::uint64_t seed = 0;
  std::optional<double> delta;  // excess margin when d = delta + E[S_n]/(n+1)
  InitPolicy init = InitPolicy::fixed;
  int threads = 1;

  void validate() const;
};

/// Totals over one simulated trajectory. cost is NaN when the scheme has no
/// cost table.
struct TrialRecord {
  double distortion = 0.0;
  double cost = 0.0;
};

/// Samples config.trials independent trajectories of length n+1. Trial t is
/// driven entirely by RNG stream t of the master seed, so the records are
/// bit-identical no matter how trials are distributed over threads.
std::vector<TrialRecord> simulate_trials(const TransmissionScheme& scheme,
                                         const SimConfig& config);

struct WilsonInterval {
  double estimate = 0.0;
  double low = 0.0;
  double high = 0.0;
};

/// Wilson score interval for a binomial proportion at critical value z.
WilsonInterval wilson_interval(long long successes, long long trials, double z);

/// Monte Carlo estimate of one excess-distortion probability with its 95%
/// interval, optionally enriched with the exact value, the concentration
/// bound, and the per-symbol average cost.
struct ExcessDistortionReport {
  double d = 0.0;
  double estimate = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::optional<double> exact;
  std::optional<double> bound;
  std::optional<double> avg_cost;
};

/// Fills the estimate and Wilson 95% interval for P{S_n > (n+1) d} from
/// per-trial records; avg_cost when the records carry costs.
ExcessDistortionReport excess_probability(std::span<const TrialRecord> records, int n, double d);

}  // namespace nrd
