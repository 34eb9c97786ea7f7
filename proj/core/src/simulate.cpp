#include "nrd/simulate.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "nrd/rng.hpp"

namespace nrd {

void SimConfig::validate() const {
  if (trials < 1) throw std::invalid_argument("SimConfig: trials must be >= 1");
  if (n < 0) throw std::invalid_argument("SimConfig: horizon must be >= 0");
  if (delta && !(*delta > 0.0)) throw std::invalid_argument("SimConfig: delta must be > 0");
  if (threads < 1) throw std::invalid_argument("SimConfig: threads must be >= 1");
}

std::vector<TrialRecord> simulate_trials(const TransmissionScheme& scheme,
                                         const SimConfig& config) {
  scheme.validate();
  config.validate();
  const InitialConditions init = InitialConditions::from_policy(scheme, config.init);
  const bool has_cost = scheme.cost.has_value();
  const int nb = scheme.channel.output_size();
  const int ny = scheme.decoder.output_size();

  std::vector<TrialRecord> records(static_cast<std::size_t>(config.trials));

  auto run_range = [&](long long lo, long long hi) {
    for (long long t = lo; t < hi; ++t) {
      Xoshiro256pp rng =
          Xoshiro256pp::for_stream(config.seed, static_cast<std::uint64_t>(t));
      int triple = rng.sample(init.weights);
      int y = triple % ny;
      int b = (triple / ny) % nb;
      int x = triple / (nb * ny);
      double distortion = 0.0;
      double cost = 0.0;
      for (int i = 0; i <= config.n; ++i) {
        const int xn = rng.sample(scheme.source.row(x));
        const int an = rng.sample(scheme.encoder.row(scheme.encoder.row_index(
            std::array<int, 2>{xn, b})));
        const int bn = rng.sample(scheme.channel.row(scheme.channel.row_index(
            std::array<int, 2>{an, b})));
        const int yn = rng.sample(scheme.decoder.row(scheme.decoder.row_index(
            std::array<int, 2>{bn, y})));
        distortion += scheme.distortion(xn, yn);
        if (has_cost) cost += (*scheme.cost)(xn, y);
        x = xn;
        b = bn;
        y = yn;
      }
      records[static_cast<std::size_t>(t)] = {
          distortion, has_cost ? cost : std::numeric_limits<double>::quiet_NaN()};
    }
  };

  if (config.threads == 1 || config.trials < 256) {
    run_range(0, config.trials);
  } else {
    std::vector<std::thread> pool;
    const long long chunk = (config.trials + config.threads - 1) / config.threads;
    for (int t = 0; t < config.threads; ++t) {
      const long long lo = static_cast<long long>(t) * chunk;
      const long long hi = std::min(config.trials, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(run_range, lo, hi);
    }
    for (auto& th : pool) th.join();
  }
  return records;
}

WilsonInterval wilson_interval(long long successes, long long trials, double z) {
  if (trials < 1) throw std::invalid_argument("wilson_interval: trials must be >= 1");
  const double nn = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double center = (phat + z2 / (2.0 * nn)) / denom;
  const double half =
      z * std::sqrt(phat * (1.0 - phat) / nn + z2 / (4.0 * nn * nn)) / denom;
  return WilsonInterval{phat, std::max(0.0, center - half), std::min(1.0, center + half)};
}

ExcessDistortionReport excess_probability(std::span<const TrialRecord> records, int n, double d) {
  if (records.empty()) throw std::invalid_argument("excess_probability: no records");
  const double threshold = (n + 1) * d;
  long long count = 0;
  double cost_sum = 0.0;
  bool has_cost = !std::isnan(records.front().cost);
  for (const TrialRecord& r : records) {
    if (r.distortion > threshold) ++count;
    if (has_cost) cost_sum += r.cost;
  }
  const WilsonInterval ci =
      wilson_interval(count, static_cast<long long>(records.size()), 1.959963984540054);
  ExcessDistortionReport report;
  report.d = d;
  report.estimate = ci.estimate;
  report.ci_low = ci.low;
  report.ci_high = ci.high;
  if (has_cost) {
    report.avg_cost = cost_sum / (static_cast<double>(records.size()) * (n + 1));
  }
  return report;
}

}  // namespace nrd
