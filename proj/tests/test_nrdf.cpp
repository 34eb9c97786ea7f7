#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "nrd/bsms.hpp"
#include "nrd/errors.hpp"
#include "nrd/info.hpp"
#include "nrd/pair_chain.hpp"
#include "nrd/solver.hpp"
#include "test_util.hpp"

using namespace nrd;

namespace {

const DistortionSpec kHamming = PairTable::hamming(2);

}  // namespace

TEST_CASE("bsms closed form at p=0.25, D=0.1") {
  const RdPoint pt = bsms_nrdf(BsmsSource(0.25), 0.1);
  CHECK(pt.R == doctest::Approx(0.41229530564141140).epsilon(1e-12));
  CHECK(pt.m == doctest::Approx(0.7).epsilon(1e-14));
  CHECK(pt.alpha == doctest::Approx(27.0 / 28.0).epsilon(1e-14));
  CHECK(pt.beta == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(pt.s == doctest::Approx(-2.1972245773362196).epsilon(1e-14));
}

TEST_CASE("bsms closed form collapses at D = 1/2 and beyond") {
  for (double p : {0.1, 0.25, 0.8}) {
    CHECK(bsms_nrdf(BsmsSource(p), 0.5).R == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(bsms_nrdf(BsmsSource(p), 0.5).m == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(bsms_nrdf(BsmsSource(p), 0.7).R == 0.0);
  }
}

TEST_CASE("memoryless reduction at p = 1/2") {
  for (double D : {0.05, 0.1, 0.25, 0.4}) {
    const RdPoint pt = bsms_nrdf(BsmsSource(0.5), D);
    CHECK(pt.m == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(pt.R == doctest::Approx(1.0 - binary_entropy(D)).epsilon(1e-12));
  }
}

TEST_CASE("bsms domain errors") {
  CHECK_THROWS_AS(bsms_nrdf(BsmsSource(0.25), 0.0), std::domain_error);
  CHECK_THROWS_AS(bsms_nrdf(BsmsSource(0.25), -0.1), std::domain_error);
  CHECK_THROWS_AS(bsms_nrdf(BsmsSource(0.25), 1.5), std::domain_error);
  CHECK_THROWS_AS(BsmsSource(0.0), std::domain_error);
  CHECK_THROWS_AS(BsmsSource(1.0), std::domain_error);
}

TEST_CASE("rate is symmetric in p") {
  Xoshiro256pp rng(21);
  for (int i = 0; i < 100; ++i) {
    const double p = test::uniform_in(rng, 0.01, 0.99);
    const double D = test::uniform_in(rng, 0.01, 0.5);
    CHECK(bsms_nrdf(BsmsSource(p), D).R ==
          doctest::Approx(bsms_nrdf(BsmsSource(1.0 - p), D).R).epsilon(1e-13));
  }
}

TEST_CASE("R(D) is nonincreasing and convex") {
  const BsmsSource source(0.25);
  const int points = 100;
  std::vector<double> r(points);
  for (int i = 0; i < points; ++i) {
    r[static_cast<std::size_t>(i)] = bsms_nrdf(source, 0.005 + 0.49 * i / (points - 1)).R;
  }
  for (int i = 0; i + 1 < points; ++i) {
    CHECK(r[static_cast<std::size_t>(i) + 1] <= r[static_cast<std::size_t>(i)] + 1e-12);
  }
  for (int i = 1; i + 1 < points; ++i) {
    CHECK(r[static_cast<std::size_t>(i) - 1] + r[static_cast<std::size_t>(i) + 1] -
              2.0 * r[static_cast<std::size_t>(i)] >=
          -1e-9);
  }
}

TEST_CASE("reproduction kernel matches the closed form") {
  const ReproductionKernel repro = bsms_reproduction_kernel(BsmsSource(0.25), 0.1);
  CHECK(repro.kernel(0, 0, 0) == doctest::Approx(27.0 / 28.0).epsilon(1e-14));
  CHECK(repro.kernel(0, 0, 1) == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(repro.kernel(1, 1, 0) == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(repro.kernel(1, 1, 1) == doctest::Approx(27.0 / 28.0).epsilon(1e-14));
  CHECK(validate_kernel(repro.kernel).empty());
  CHECK(validate_kernel(repro.marginal).empty());
  // The optimal marginal is the source transition itself.
  CHECK(repro.marginal.max_deviation(BsmsSource(0.25).transition()) == 0.0);
}

TEST_CASE("reproduction kernel tends to perfect reproduction as D -> 0") {
  const ReproductionKernel repro = bsms_reproduction_kernel(BsmsSource(0.3), 1e-12);
  CHECK(repro.kernel(0, 0, 0) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(repro.kernel(1, 1, 0) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK_THROWS_AS(bsms_reproduction_kernel(BsmsSource(0.3), 0.6), std::domain_error);
  CHECK_THROWS_AS(bsms_reproduction_kernel(BsmsSource(0.3), 0.0), std::domain_error);
}

TEST_CASE("reproduction kernel is self-consistent under the stationary law") {
  for (double p : {0.1, 0.25, 0.45}) {
    for (double D : {0.05, 0.2, 0.45}) {
      const ReproductionKernel repro = bsms_reproduction_kernel(BsmsSource(p), D);
      CHECK(reproduction_consistency_residual(BsmsSource(p).transition(), repro) <= 1e-9);
    }
  }
}

TEST_CASE("tilted update at s = 0 reproduces the marginal") {
  Xoshiro256pp rng(22);
  const StochasticKernel marginal = test::random_square_kernel(rng, 2);
  const StochasticKernel k = tilted_update(marginal, 0.0, kHamming);
  for (int x = 0; x < 2; ++x) {
    for (int yp = 0; yp < 2; ++yp) {
      for (int y = 0; y < 2; ++y) {
        CHECK(k(y, x, yp) == doctest::Approx(marginal.at(y, yp)).epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("tilted update hand-checked value") {
  StochasticKernel uniform({2}, 2);
  uniform.set_row(0, std::vector<double>{0.5, 0.5});
  uniform.set_row(1, std::vector<double>{0.5, 0.5});
  const StochasticKernel k = tilted_update(uniform, std::log(1.0 / 9.0), kHamming);
  CHECK(k(0, 0, 0) == doctest::Approx(0.9).epsilon(1e-14));
  CHECK(k(1, 0, 0) == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(k(1, 1, 1) == doctest::Approx(0.9).epsilon(1e-14));
}

TEST_CASE("tilted update concentrates as s -> -inf") {
  StochasticKernel uniform({2}, 2);
  uniform.set_row(0, std::vector<double>{0.5, 0.5});
  uniform.set_row(1, std::vector<double>{0.5, 0.5});
  const StochasticKernel k = tilted_update(uniform, -50.0, kHamming);
  CHECK(k(0, 0, 0) >= 1.0 - 1e-9);
  CHECK(k(1, 1, 0) >= 1.0 - 1e-9);
}

TEST_CASE("tilted update degeneracy and validation errors") {
  StochasticKernel point({2}, 2);
  point.set_row(0, std::vector<double>{0.0, 1.0});
  point.set_row(1, std::vector<double>{0.0, 1.0});
  // All marginal mass sits on the penalized symbol for x=0; e^{-800} underflows.
  CHECK_THROWS_AS(tilted_update(point, -800.0, kHamming), DegeneracyError);
  CHECK_THROWS_AS(tilted_update(point, 1.0, kHamming), std::domain_error);
}

TEST_CASE("tilted rows renormalize exactly") {
  Xoshiro256pp rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const StochasticKernel marginal = test::random_square_kernel(rng, 3);
    const double s = -10.0 * rng.next_unit();
    const StochasticKernel k = tilted_update(marginal, s, PairTable::hamming(3));
    for (int r = 0; r < k.row_count(); ++r) {
      double sum = 0.0;
      for (double v : k.row(r)) sum += v;
      CHECK(std::abs(sum - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("fixed point reproduces the closed form") {
  const StochasticKernel source = BsmsSource(0.25).transition();
  const FixedPointResult fp = fixed_point_solve(source, kHamming, std::log(0.1 / 0.9));
  CHECK(std::abs(fp.reproduction.kernel(0, 0, 0) - 27.0 / 28.0) <= 1e-6);
  CHECK(std::abs(fp.reproduction.kernel(1, 1, 0) - 0.75) <= 1e-6);
  CHECK(fp.residual <= 1e-10);
}

TEST_CASE("fixed point at s = 0 keeps the initial marginal and carries no information") {
  const StochasticKernel source = BsmsSource(0.25).transition();
  const FixedPointResult fp = fixed_point_solve(source, kHamming, 0.0);
  CHECK(fp.iterations == 1);
  CHECK(stationary_information_rate(source, fp.reproduction) <= 1e-12);
  CHECK(nrdf_value(source, kHamming, 0.0, fp.reproduction) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(stationary_distortion(source, fp.reproduction.kernel, kHamming) ==
        doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("fixed point is initialization independent") {
  const StochasticKernel source = BsmsSource(0.25).transition();
  const double s = std::log(0.1 / 0.9);
  const FixedPointResult from_uniform = fixed_point_solve(source, kHamming, s);
  StochasticKernel skewed({2}, 2);
  skewed.set_row(0, std::vector<double>{0.9, 0.1});
  skewed.set_row(1, std::vector<double>{0.9, 0.1});
  const FixedPointResult from_skewed = fixed_point_solve(source, kHamming, s, skewed);
  CHECK(from_uniform.reproduction.kernel.max_deviation(from_skewed.reproduction.kernel) <= 1e-6);
}

TEST_CASE("fixed point reports non-convergence") {
  const StochasticKernel source = BsmsSource(0.25).transition();
  SolverOptions options;
  options.max_iter = 2;
  options.tol = 1e-16;
  try {
    fixed_point_solve(source, kHamming, std::log(0.1 / 0.9), options);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.residual() > 0.0);
  }
}

TEST_CASE("distortion bisection hits the closed form") {
  const StochasticKernel source = BsmsSource(0.25).transition();
  const SolveResult sol = distortion_bisection(source, kHamming, 0.1);
  CHECK(std::abs(sol.point.R - 0.41229530564141140) <= 1e-4);
  CHECK(std::abs(sol.point.alpha - 27.0 / 28.0) <= 1e-6);
  CHECK(std::abs(sol.point.beta - 0.75) <= 1e-6);
  CHECK(std::abs(sol.point.D - 0.1) <= 1e-8);
  CHECK(std::abs(sol.point.m - 0.7) <= 1e-6);
}

TEST_CASE("distortion bisection zero-rate and monotonicity") {
  const StochasticKernel source = BsmsSource(0.3).transition();
  const SolveResult zero = distortion_bisection(source, kHamming, 0.5);
  CHECK(zero.point.s == 0.0);
  CHECK(zero.point.R <= 1e-9);
  CHECK(distortion_bisection(source, kHamming, 0.05).point.R >
        distortion_bisection(source, kHamming, 0.2).point.R);
  CHECK_THROWS_AS(distortion_bisection(source, kHamming, 0.6), BracketError);
  // Under Hamming the minimum achievable distortion is 0, so the low side
  // can only be exercised with a distortion table bounded away from zero.
  const DistortionSpec shifted(2, 2, {1.0, 2.0, 2.0, 1.0});
  CHECK_THROWS_AS(distortion_bisection(source, shifted, 0.5), BracketError);
}

TEST_CASE("nrdf value agrees with the conditional-information route") {
  const StochasticKernel source = BsmsSource(0.25).transition();
  const double s = std::log(0.1 / 0.9);
  const FixedPointResult fp = fixed_point_solve(source, kHamming, s);
  const double by_formula = nrdf_value(source, kHamming, s, fp.reproduction);
  const double by_information = stationary_information_rate(source, fp.reproduction);
  CHECK(std::abs(by_formula - by_information) <= 1e-6);
  CHECK(std::abs(by_formula - 0.41229530564141140) <= 1e-4);
}

TEST_CASE("solver matches the closed form on a small grid") {
  for (double p : {0.1, 0.3}) {
    const StochasticKernel source = BsmsSource(p).transition();
    for (double D : {0.05, 0.25, 0.45}) {
      const RdPoint expected = bsms_nrdf(BsmsSource(p), D);
      const SolveResult sol = distortion_bisection(source, kHamming, D);
      CHECK(std::abs(sol.point.alpha - expected.alpha) <= 1e-6);
      CHECK(std::abs(sol.point.beta - expected.beta) <= 1e-6);
      CHECK(std::abs(sol.point.R - expected.R) <= 1e-4);
    }
  }
}
