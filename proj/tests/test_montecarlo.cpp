#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "nrd/bound.hpp"
#include "nrd/bsms.hpp"
#include "nrd/enumeration.hpp"
#include "nrd/joint_chain.hpp"
#include "nrd/rng.hpp"
#include "nrd/scheme.hpp"
#include "nrd/simulate.hpp"

using namespace nrd;

namespace {

const DistortionSpec kHamming = PairTable::hamming(2);

}  // namespace

TEST_CASE("per-trial streams are independent of the thread count") {
  const TransmissionScheme scheme = build_matched_scheme(0.25, 0.1, true);
  SimConfig config;
  config.n = 16;
  config.trials = 20000;
  config.seed = 42;
  config.threads = 1;
  const auto serial = simulate_trials(scheme, config);
  config.threads = 8;
  const auto parallel = simulate_trials(scheme, config);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].distortion == parallel[i].distortion);
    CHECK(serial[i].cost == parallel[i].cost);
  }
}

TEST_CASE("degenerate kernels give a deterministic trial") {
  TransmissionScheme scheme = build_unmatched_scheme(0.25, 0.1);
  scheme.source = StochasticKernel::from_rows({2}, 2, {{1.0, 0.0}, {1.0, 0.0}});
  scheme.channel = StochasticKernel::deterministic({2, 2}, 2,
                                                   [](std::span<const int> c) { return c[0]; });
  SimConfig config;
  config.n = 0;
  config.trials = 3;
  config.seed = 9;
  const auto records = simulate_trials(scheme, config);
  for (const TrialRecord& r : records) {
    CHECK(r.distortion == 0.0);
    CHECK(std::isnan(r.cost));
  }
}

TEST_CASE("sample mean of the per-symbol distortion is unbiased") {
  const TransmissionScheme scheme = build_unmatched_scheme(0.25, 0.1);
  SimConfig config;
  config.n = 100;
  config.trials = 100000;
  config.seed = 3;
  // Stationary start so E[S_n]/(n+1) equals the stationary expectation exactly.
  config.init = InitPolicy::stationary;
  config.threads = 8;
  const auto records = simulate_trials(scheme, config);
  double sum = 0.0;
  double sq = 0.0;
  for (const TrialRecord& r : records) {
    const double v = r.distortion / (config.n + 1);
    sum += v;
    sq += v * v;
  }
  const double nn = static_cast<double>(config.trials);
  const double mean = sum / nn;
  const double se = std::sqrt((sq / nn - mean * mean) / nn);
  const double expect = joint_chain(scheme).expected_distortion;
  CHECK(std::abs(mean - expect) <= 3.0 * se);
}

TEST_CASE("estimate agrees with exact enumeration") {
  const TransmissionScheme scheme = build_unmatched_scheme(0.25, 0.1);
  SimConfig config;
  config.n = 8;
  config.trials = 100000;
  config.seed = 7;
  config.threads = 8;
  const auto records = simulate_trials(scheme, config);
  const ExcessDistortionReport report = excess_probability(records, config.n, 0.2);
  const double exact = excess_distortion_exact(
      enumerate_joint(scheme, config.n, {Var::X, Var::Y}), 0.2, kHamming);
  const long long hits = std::llround(report.estimate * static_cast<double>(config.trials));
  const WilsonInterval wide = wilson_interval(hits, config.trials, 3.0);
  CHECK(exact >= wide.low);
  CHECK(exact <= wide.high);
}

TEST_CASE("excess probability edge cases") {
  std::vector<TrialRecord> records(10, TrialRecord{1.0, std::nan("")});
  const ExcessDistortionReport zero = excess_probability(records, 9, 0.5);
  CHECK(zero.estimate == 0.0);
  CHECK(zero.ci_high > 0.0);
  CHECK_FALSE(zero.avg_cost.has_value());

  const ExcessDistortionReport one = excess_probability(records, 9, -0.1);
  CHECK(one.estimate == 1.0);
  CHECK(one.ci_low < 1.0);

  CHECK_THROWS_AS(excess_probability({}, 3, 0.1), std::invalid_argument);
}

TEST_CASE("matched scheme empirical cost sits at the matched level") {
  const TransmissionScheme scheme = build_matched_scheme(0.25, 0.1, false);
  SimConfig config;
  config.n = 200;
  config.trials = 5000;
  config.seed = 11;
  config.init = InitPolicy::stationary;
  config.threads = 8;
  const auto records = simulate_trials(scheme, config);
  double sum = 0.0;
  double sq = 0.0;
  for (const TrialRecord& r : records) {
    const double v = r.cost / (config.n + 1);
    sum += v;
    sq += v * v;
  }
  const double nn = static_cast<double>(config.trials);
  const double mean = sum / nn;
  const double se = std::sqrt((sq / nn - mean * mean) / nn);
  CHECK(std::abs(mean - 0.7) <= 3.0 * se);

  const ExcessDistortionReport report = excess_probability(records, config.n, 0.5);
  REQUIRE(report.avg_cost.has_value());
  CHECK(*report.avg_cost == doctest::Approx(mean).epsilon(1e-12));
}

TEST_CASE("minorization constant and validity threshold") {
  const RdPoint pt = bsms_nrdf(BsmsSource(0.25), 0.1);
  const double lambda = bsms_minorization_lambda(0.25, pt.alpha, pt.beta);
  CHECK(std::abs(lambda - 1.0 / 112.0) <= 1e-15);

  BoundParams params{lambda, 1.0, 1.0, 0.01, 0};
  CHECK(params.validity_threshold() == 22400);
  params.n = 22400;
  CHECK_FALSE(hoeffding_bound(params).has_value());
  params.n = 22401;
  const auto just_valid = hoeffding_bound(params);
  REQUIRE(just_valid.has_value());
  CHECK(*just_valid > 0.999);
  CHECK(*just_valid < 1.0);

  params.n = 30000;
  const auto later = hoeffding_bound(params);
  params.n = 100000;
  const auto even_later = hoeffding_bound(params);
  CHECK(*just_valid > *later);
  CHECK(*later > *even_later);

  CHECK_THROWS_AS(hoeffding_bound(BoundParams{0.0, 1.0, 1.0, 0.01, 10}), std::domain_error);
  CHECK_THROWS_AS(hoeffding_bound(BoundParams{0.5, 1.0, 1.0, -0.1, 10}), std::domain_error);
}

TEST_CASE("bound curve decreases toward zero past the threshold") {
  const auto curve = bound_curve(0.25, 0.1, 0.01, {30000, 100000, 1000000});
  REQUIRE(curve.size() == 3);
  for (const BoundPoint& pt : curve) {
    REQUIRE(pt.bound.has_value());
    CHECK(*pt.bound > 0.0);
  }
  CHECK(*curve[0].bound > *curve[1].bound);
  CHECK(*curve[1].bound > *curve[2].bound);
  // The exponent scales like -lambda^2 delta^2 n / 2, so vanishing needs very
  // long horizons at this lambda.
  const auto far = bound_curve(0.25, 0.1, 0.01, {1000000000000LL});
  REQUIRE(far[0].bound.has_value());
  CHECK(*far[0].bound < 1e-100);

  const auto below = bound_curve(0.25, 0.1, 0.01, {100, 1000, 22400});
  for (const BoundPoint& pt : below) CHECK_FALSE(pt.bound.has_value());

  CHECK(bound_curve(0.25, 0.1, 0.01, {50000}).size() == 1);
  CHECK_THROWS_AS(bound_curve(0.25, 0.1, 0.01, {200, 100}), std::invalid_argument);
}

TEST_CASE("bound dominates the exact excess probability when valid") {
  // Synthetic configuration with a large minorization constant so that the
  // validity threshold falls inside the enumeration range.
  const double p = 0.5;
  const double D = 0.5;
  const RdPoint pt = bsms_nrdf(BsmsSource(p), D);
  const double lambda = bsms_minorization_lambda(p, pt.alpha, pt.beta);
  CHECK(lambda == doctest::Approx(0.25).epsilon(1e-14));
  const double delta = 1.0;
  BoundParams params{lambda, 1.0, 1.0, delta, 9};
  CHECK(params.validity_threshold() == 8);
  const auto bound = hoeffding_bound(params);
  REQUIRE(bound.has_value());

  const TransmissionScheme scheme = build_unmatched_scheme(p, D);
  EnumerationOptions opts;
  opts.init = InitialConditions::stationary_pair(scheme);
  const JointTable table = enumerate_joint(scheme, 9, {Var::X, Var::Y}, opts);
  const double d = delta + exact_expected_distortion(table, kHamming);
  CHECK(excess_distortion_exact(table, d, kHamming) <= *bound + 1e-12);
}

TEST_CASE("distinct streams differ") {
  Xoshiro256pp a = Xoshiro256pp::for_stream(0, 0);
  Xoshiro256pp b = Xoshiro256pp::for_stream(0, 1);
  bool differs = false;
  for (int i = 0; i < 8; ++i) differs = differs || a.next() != b.next();
  CHECK(differs);
}

TEST_CASE("sim config validation") {
  SimConfig config;
  config.trials = 0;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);
  config.trials = 1;
  config.n = -1;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);
  config.n = 0;
  config.delta = -0.5;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);
}
