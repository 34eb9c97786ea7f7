#include <doctest.h>

#include <cmath>

#include "nrd/errors.hpp"
#include "nrd/joint_chain.hpp"
#include "nrd/pair_chain.hpp"
#include "nrd/scheme.hpp"
#include "nrd/stationary.hpp"

using namespace nrd;

TEST_CASE("unmatched scheme wires the reproduction kernel as the channel") {
  const TransmissionScheme scheme = build_unmatched_scheme(0.25, 0.1);
  const ReproductionKernel target = bsms_reproduction_kernel(BsmsSource(0.25), 0.1);
  CHECK(scheme.channel.max_deviation(target.kernel) == 0.0);
  CHECK_FALSE(scheme.cost.has_value());
  CHECK_FALSE(scheme.uses_feedback);
  CHECK(has_identity_decoder(scheme));

  // Identity encoder and decoder leave the channel as the induced kernel.
  CHECK(induced_reproduction(scheme).max_deviation(target.kernel) == 0.0);
  CHECK(verify_realization(scheme, target).ok);
}

TEST_CASE("matched scheme without feedback adds only the cost table") {
  const TransmissionScheme matched = build_matched_scheme(0.25, 0.1, false);
  const TransmissionScheme unmatched = build_unmatched_scheme(0.25, 0.1);
  CHECK(matched.channel.max_deviation(unmatched.channel) == 0.0);
  REQUIRE(matched.cost.has_value());
  CHECK((*matched.cost)(0, 0) == 1.0);
  CHECK((*matched.cost)(0, 1) == 0.0);
  CHECK((*matched.cost)(1, 0) == 0.0);
  CHECK((*matched.cost)(1, 1) == 1.0);
  CHECK_FALSE(matched.uses_feedback);
}

TEST_CASE("feedback scheme cancels the column switch exactly") {
  const TransmissionScheme fb = build_matched_scheme(0.25, 0.1, true);
  CHECK(fb.uses_feedback);
  // Encoder is a = x xor b_prev.
  CHECK(fb.encoder(1, 1, 0) == 1.0);
  CHECK(fb.encoder(0, 1, 1) == 1.0);
  const ReproductionKernel target = bsms_reproduction_kernel(BsmsSource(0.25), 0.1);
  const RealizationCheck check = verify_realization(fb, target);
  CHECK(check.ok);
  CHECK(check.max_deviation == 0.0);
}

TEST_CASE("feedback and plain matched schemes induce the same law") {
  for (double p : {0.1, 0.25, 0.4}) {
    for (double D : {0.05, 0.1, 0.3}) {
      const StochasticKernel a = induced_reproduction(build_matched_scheme(p, D, false));
      const StochasticKernel b = induced_reproduction(build_matched_scheme(p, D, true));
      CHECK(a.max_deviation(b) <= 1e-12);
    }
  }
}

TEST_CASE("joint chain meets the design distortion and cost level") {
  const JointChain unmatched = joint_chain(build_unmatched_scheme(0.25, 0.1));
  CHECK(std::abs(unmatched.expected_distortion - 0.1) <= 1e-12);
  CHECK_FALSE(unmatched.expected_cost.has_value());

  const JointChain matched = joint_chain(build_matched_scheme(0.25, 0.1, false));
  REQUIRE(matched.expected_cost.has_value());
  CHECK(std::abs(*matched.expected_cost - 0.7) <= 1e-12);

  // Stationary X marginal is uniform by source symmetry.
  double x0 = 0.0;
  for (int y = 0; y < matched.ny; ++y) x0 += matched.stationary[matched.state(0, y)];
  CHECK(std::abs(x0 - 0.5) <= 1e-12);

  // The transition is a proper stochastic matrix and the chain is irreducible
  // for interior parameters.
  CHECK(validate_kernel(matched.transition).empty());
  for (int z = 0; z < 4; ++z) CHECK(matched.stationary[z] > 0.0);
}

TEST_CASE("cost level equals the stationary probability of x = y_prev") {
  for (double p : {0.15, 0.25, 0.6}) {
    for (double D : {0.05, 0.1, 0.4}) {
      const TransmissionScheme scheme = build_matched_scheme(p, D, false);
      const JointChain chain = joint_chain(scheme);
      const double m = 1.0 - p - D + 2.0 * p * D;
      REQUIRE(chain.expected_cost.has_value());
      CHECK(std::abs(*chain.expected_cost - m) <= 1e-12);

      // Same number through the predecessor pair law directly.
      const std::vector<double> w =
          predecessor_pair_law(scheme.source, chain.stationary, chain.ny);
      double match_mass = 0.0;
      for (int x = 0; x < chain.nx; ++x) match_mass += w[static_cast<std::size_t>(x) * 2 + x];
      CHECK(std::abs(match_mass - m) <= 1e-12);
    }
  }
}

TEST_CASE("verify_realization reports an injected channel defect") {
  TransmissionScheme scheme = build_unmatched_scheme(0.25, 0.1);
  const double alpha = 27.0 / 28.0;
  std::vector<double> row{alpha + 0.01, 1.0 - alpha - 0.01};
  scheme.channel.set_row(0, row);
  const RealizationCheck check =
      verify_realization(scheme, bsms_reproduction_kernel(BsmsSource(0.25), 0.1));
  CHECK_FALSE(check.ok);
  CHECK(check.max_deviation == doctest::Approx(0.01).epsilon(1e-9));
  CHECK_FALSE(check.deviations.empty());
}

TEST_CASE("verify_realization rejects mismatched alphabets") {
  const TransmissionScheme scheme = build_unmatched_scheme(0.25, 0.1);
  ReproductionKernel ternary;
  ternary.kernel = StochasticKernel({3, 3}, 3);
  ternary.marginal = StochasticKernel({3}, 3);
  CHECK_THROWS_AS(verify_realization(scheme, ternary), ShapeError);
}

TEST_CASE("composition requires an identity decoder") {
  TransmissionScheme scheme = build_unmatched_scheme(0.25, 0.1);
  scheme.decoder = StochasticKernel::from_rows(
      {2, 2}, 2, {{0.9, 0.1}, {0.9, 0.1}, {0.1, 0.9}, {0.1, 0.9}});
  CHECK_FALSE(has_identity_decoder(scheme));
  CHECK_THROWS_AS(induced_reproduction(scheme), StructureError);
  CHECK_THROWS_AS(joint_chain(scheme), StructureError);
}

TEST_CASE("scheme json round trip") {
  const TransmissionScheme scheme = build_matched_scheme(0.25, 0.1, true);
  const TransmissionScheme back = scheme_from_json_string(to_json_string(scheme));
  CHECK(back.source.max_deviation(scheme.source) == 0.0);
  CHECK(back.encoder.max_deviation(scheme.encoder) == 0.0);
  CHECK(back.channel.max_deviation(scheme.channel) == 0.0);
  CHECK(back.decoder.max_deviation(scheme.decoder) == 0.0);
  CHECK(back.uses_feedback == scheme.uses_feedback);
  REQUIRE(back.cost.has_value());
  CHECK(*back.cost == *scheme.cost);
  CHECK(back.distortion == scheme.distortion);
}

TEST_CASE("every built scheme realizes its target kernel with distortion D") {
  for (double p : {0.05, 0.25, 0.45, 0.8}) {
    for (double D : {0.02, 0.1, 0.3, 0.5}) {
      const ReproductionKernel target = bsms_reproduction_kernel(BsmsSource(p), D);
      for (const TransmissionScheme& scheme :
           {build_unmatched_scheme(p, D), build_matched_scheme(p, D, false),
            build_matched_scheme(p, D, true)}) {
        CHECK(verify_realization(scheme, target).ok);
        CHECK(std::abs(joint_chain(scheme).expected_distortion - D) <= 1e-12);
      }
    }
  }
}
