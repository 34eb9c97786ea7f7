#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "nrd/bsms.hpp"
#include "nrd/info.hpp"
#include "nrd/matching.hpp"
#include "test_util.hpp"

using namespace nrd;

TEST_CASE("constrained capacity endpoints and hand value") {
  CHECK(constrained_capacity(0.9, 0.7, 0.0).C == doctest::Approx(0.0).epsilon(1e-14));
  // beta(1-k) + (1-alpha)k = 0.225 + 0.025 = 0.25 at the matched point.
  const CapacityPoint pt = constrained_capacity(27.0 / 28.0, 0.75, 0.7);
  CHECK(pt.C == doctest::Approx(0.41229530564141140).epsilon(1e-12));
  // With alpha = beta the formula value is H(beta + kappa(1 - 2 beta)) - H(beta):
  // zero at kappa = 0, and zero for every kappa only at beta = 1/2.
  for (double kappa : {0.0, 0.3, 0.8, 1.0}) {
    CHECK(constrained_capacity(0.5, 0.5, kappa).C == doctest::Approx(0.0).epsilon(1e-14));
    const double direct = binary_entropy(0.6 + kappa * (1.0 - 2.0 * 0.6)) - binary_entropy(0.6);
    CHECK(constrained_capacity(0.6, 0.6, kappa).C == doctest::Approx(direct).epsilon(1e-12));
  }
  CHECK_THROWS_AS(constrained_capacity(-0.1, 0.5, 0.5), std::domain_error);
  CHECK_THROWS_AS(constrained_capacity(0.5, 1.1, 0.5), std::domain_error);
  CHECK_THROWS_AS(constrained_capacity(0.5, 0.5, 2.0), std::domain_error);
}

TEST_CASE("matching at reference points") {
  const MatchingReport r1 = match_source_to_channel(0.25, 0.1);
  CHECK(r1.matched);
  CHECK(r1.gap <= 1e-9);
  CHECK(r1.R == doctest::Approx(0.41229530564141140).epsilon(1e-12));
  CHECK(r1.m == doctest::Approx(0.7).epsilon(1e-14));

  const MatchingReport r2 = match_source_to_channel(0.5, 0.25);
  CHECK(r2.R == doctest::Approx(1.0 - binary_entropy(0.25)).epsilon(1e-12));
  CHECK(r2.gap <= 1e-9);

  const MatchingReport r3 = match_source_to_channel(0.3, 0.5);
  CHECK(r3.R == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(r3.C == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(r3.matched);

  CHECK_THROWS_AS(match_source_to_channel(0.25, 0.0), std::domain_error);
  CHECK_THROWS_AS(match_source_to_channel(1.2, 0.1), std::domain_error);
}

TEST_CASE("matching identity holds across the parameter square") {
  Xoshiro256pp rng(31);
  for (int i = 0; i < 200; ++i) {
    const double p = test::uniform_in(rng, 0.01, 0.99);
    const double D = test::uniform_in(rng, 0.01, 0.5);
    const MatchingReport report = match_source_to_channel(p, D);
    CHECK(report.gap <= 1e-9);
    CHECK(report.matched);
  }
}

TEST_CASE("mixture lemma: beta(1-m) + (1-alpha)m = p") {
  Xoshiro256pp rng(32);
  for (int i = 0; i < 200; ++i) {
    const double p = test::uniform_in(rng, 0.01, 0.99);
    const double D = test::uniform_in(rng, 0.01, 0.5);
    const RdPoint pt = bsms_nrdf(BsmsSource(p), D);
    CHECK(std::abs(pt.beta * (1.0 - pt.m) + (1.0 - pt.alpha) * pt.m - p) <= 1e-12);
    // And the resulting closed form for the matched capacity.
    const double c = constrained_capacity(pt.alpha, pt.beta, pt.m).C;
    const double direct = binary_entropy(p) - pt.m * binary_entropy(pt.alpha) -
                          (1.0 - pt.m) * binary_entropy(pt.beta);
    CHECK(std::abs(c - direct) <= 1e-12);
  }
}

TEST_CASE("capacity is concave in kappa") {
  const double alpha = 0.96;
  const double beta = 0.7;
  const int points = 101;
  std::vector<double> c(points);
  for (int i = 0; i < points; ++i) {
    c[static_cast<std::size_t>(i)] =
        constrained_capacity(alpha, beta, static_cast<double>(i) / (points - 1)).C;
  }
  for (int i = 1; i + 1 < points; ++i) {
    const double second = c[static_cast<std::size_t>(i) - 1] +
                          c[static_cast<std::size_t>(i) + 1] -
                          2.0 * c[static_cast<std::size_t>(i)];
    CHECK(second <= 1e-8);
  }
}

TEST_CASE("capacity curve shapes") {
  const RdPoint pt = bsms_nrdf(BsmsSource(0.25), 0.1);
  const auto three = capacity_curve(pt.alpha, pt.beta, {0.0, pt.m, 1.0});
  REQUIRE(three.size() == 3);
  CHECK(three[0].C == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(three[1].C == doctest::Approx(0.41229530564141140).epsilon(1e-12));
  CHECK(three[2].C == doctest::Approx(binary_entropy(1.0 - pt.alpha) - binary_entropy(pt.alpha))
                          .epsilon(1e-12));

  CHECK(capacity_curve(0.9, 0.7, {0.0}).size() == 1);

  std::vector<double> grid(101);
  for (int i = 0; i < 101; ++i) grid[static_cast<std::size_t>(i)] = i / 100.0;
  const auto curve = capacity_curve(0.9, 0.7, grid);
  REQUIRE(curve.size() == 101);
  for (int i = 0; i < 101; ++i) {
    CHECK(curve[static_cast<std::size_t>(i)].kappa == grid[static_cast<std::size_t>(i)]);
  }
}

TEST_CASE("matching report serializes to json") {
  const std::string text = to_json_string(match_source_to_channel(0.25, 0.1));
  CHECK(text.find("\"matched\": true") != std::string::npos);
  CHECK(text.find("\"R_bits\": 0.41229530564141137") != std::string::npos);
}
