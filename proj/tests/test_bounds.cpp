#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "entropic/binning.hpp"
#include "entropic/bounds.hpp"
#include "entropic/errors.hpp"
#include "entropic/states.hpp"

using namespace entropic;

namespace {

ProbabilityVector halves() {
  ProbabilityVector pv;
  pv.probs = {0.5, 0.5};
  return pv;
}

ProbabilityVector certain() {
  ProbabilityVector pv;
  pv.probs = {1.0};
  return pv;
}

}  // namespace

TEST_CASE("bound checks carry a symmetric tolerance band") {
  CHECK(BoundCheck::kTolerance == 1e-9);
  const auto pass = BoundCheck::of(1.0, 0.5, "x");
  CHECK(pass.margin == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(pass.satisfied);
  CHECK(pass.context == "x");
  // 1 + 1e-9 itself rounds to a shortfall just past the band, so probe a
  // hair inside and a hair outside instead
  CHECK(BoundCheck::of(1.0, 1.0 + 0.99e-9, "x").satisfied);
  CHECK_FALSE(BoundCheck::of(1.0, 1.0 + 1.01e-9, "x").satisfied);
}

TEST_CASE("conjugate orders pair up around 1") {
  CHECK(conjugate_order(1.0) == 1.0);
  CHECK(conjugate_order(2.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(conjugate_order(1e9) > 0.5);
  CHECK(conjugate_order(1e9) < 0.5 + 1e-8);
  CHECK_THROWS_AS(conjugate_order(0.5), DomainError);
  CHECK_THROWS_AS(conjugate_order(0.2), DomainError);

  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> alphas(0.501, 100.0);
  for (int i = 0; i < 50; ++i) {
    const double a = alphas(rng);
    CHECK(std::abs(conjugate_order(conjugate_order(a)) - a) < 1e-12 * a);
    const double b = conjugate_order(a);
    CHECK(std::abs(1.0 / a + 1.0 / b - 2.0) < 1e-12);
  }
}

TEST_CASE("renyi bound values and limits") {
  const auto shannon_pair = EntropyOrderPair::from_alpha(1.0);
  CHECK(renyi_bound(shannon_pair, M_PI, 1.0) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(renyi_bound(EntropyOrderPair::from_alpha(2.0), 1.0, 1.0) ==
        doctest::Approx(2.09950113829161940182).epsilon(1e-14));
  CHECK(renyi_bound(shannon_pair, 1e4, 1e4) < 0.0);

  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> widths(0.05, 20.0);
  for (int i = 0; i < 50; ++i) {
    const double dx = widths(rng);
    const double dp = widths(rng);
    CHECK(std::abs(renyi_bound(shannon_pair, dx, dp) - shannon_bound(dx, dp)) <
          1e-12);
  }
  CHECK_THROWS_AS(renyi_bound(shannon_pair, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(renyi_bound(shannon_pair, 1.0, -1.0), DomainError);
}

TEST_CASE("shannon bound closed-form points") {
  const PhysicalConstants consts;
  CHECK(shannon_bound(consts.h() / 2.0, 1.0) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(shannon_bound(M_E * consts.h() / 2.0, 1.0)) < 1e-13);
  CHECK(shannon_bound(M_E * consts.h(), 1.0) ==
        doctest::Approx(-0.69314718055994530942).epsilon(1e-14));
  CHECK(shannon_bound(1.0, 1.0) ==
        doctest::Approx(2.14472988584940017414).epsilon(1e-15));
}

TEST_CASE("the flawed bound stays positive and levels off") {
  const PhysicalConstants consts;
  CHECK(ww_bound(consts.h(), 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(ww_bound(1e-12, 1e-12) > 20.0);
  CHECK(ww_bound(std::numeric_limits<double>::infinity(), 1.0) ==
        doctest::Approx(0.30685281944005469058).epsilon(1e-15));

  double prev = std::numeric_limits<double>::infinity();
  for (double product = 1.0; product <= 1e12 * consts.h(); product *= 10.0) {
    const double b = ww_bound(product, 1.0);
    CHECK(b > 0.30685281944005469058);
    CHECK(b < prev);
    prev = b;
  }
}

TEST_CASE("the additive offset is unbounded below") {
  CHECK(ww_offset(1.0) == doctest::Approx(0.30685281944005469058).epsilon(1e-15));
  CHECK(std::abs(ww_offset(1.1658219907985621017)) < 1e-14);
  CHECK(ww_offset(10.0) < -4.0);
  CHECK_THROWS_AS(ww_offset(0.0), DomainError);
  CHECK_THROWS_AS(ww_offset(-1.0), DomainError);
}

TEST_CASE("eta prefactor values") {
  const PhysicalConstants consts;
  const auto pair = EntropyOrderPair::from_alpha(2.0);
  CHECK(eta(EntropyOrderPair::from_alpha(1.0), 0.37, 5.1) == 1.0);
  // dx*dp = h/(2 beta) forces the second factor to 1
  CHECK(eta(pair, consts.h() / (2.0 * pair.beta()), 1.0) ==
        doctest::Approx(0.75983568565159254733).epsilon(1e-14));
  CHECK(eta(pair, consts.h(), 1.0) ==
        doctest::Approx(0.87738267530166164055).epsilon(1e-14));
  CHECK_THROWS_AS(eta(EntropyOrderPair(0.9, 9.0 / 8.0), 1.0, 1.0), DomainError);
}

TEST_CASE("compactified eta is the same arithmetic without h") {
  const auto pair = EntropyOrderPair::from_alpha(2.0);
  CHECK(eta_compactified(pair, 0.1, 1.0) ==
        doctest::Approx(0.27745276335252114756).epsilon(1e-14));
  CHECK(eta_compactified(EntropyOrderPair::from_alpha(1.0), 0.3, 0.7) == 1.0);
  CHECK(eta_compactified(pair, 1.0, 1.0) ==
        doctest::Approx(0.87738267530166164055).epsilon(1e-14));
  CHECK_THROWS_AS(eta_compactified(EntropyOrderPair(0.9, 9.0 / 8.0), 0.5, 0.5),
                  DomainError);
}

TEST_CASE("norm inequality check on the paper's two-bin probabilities") {
  const auto pair = EntropyOrderPair::from_alpha(2.0);
  const double eta_value = eta_compactified(pair, 0.1, 1.0);
  const auto check = check_norm_inequality(halves(), halves(), pair, eta_value);
  CHECK(check.lhs == doctest::Approx(-0.707106781186547524401).epsilon(1e-14));
  CHECK(check.rhs == doctest::Approx(-0.39237746085102824605).epsilon(1e-14));
  CHECK_FALSE(check.satisfied);
  CHECK(check.margin < -0.3);
  CHECK(check.context.find("alpha") != std::string::npos);
}

TEST_CASE("norm inequality equality case") {
  const auto pair = EntropyOrderPair::from_alpha(3.0);
  const auto check = check_norm_inequality(certain(), certain(), pair, 1.0);
  CHECK(check.lhs == -1.0);
  CHECK(check.rhs == -1.0);
  CHECK(check.satisfied);
}

TEST_CASE("norm inequality holds for fourier-paired gaussian bins") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> centers(-3.0, 3.0);
  std::uniform_real_distribution<double> sigmas(0.3, 3.0);
  std::uniform_real_distribution<double> widths(0.2, 3.0);
  std::uniform_real_distribution<double> alphas(1.0, 4.0);
  for (int i = 0; i < 100; ++i) {
    const GaussianState state(centers(rng), centers(rng), sigmas(rng));
    const double dx = widths(rng);
    const double dp = widths(rng);
    const auto pair = EntropyOrderPair::from_alpha(alphas(rng));
    const auto pv_x =
        bin_probabilities(state, Space::position, UniformBins{dx, 0.0});
    const auto pv_p =
        bin_probabilities(state, Space::momentum, UniformBins{dp, 0.0});
    const auto check =
        check_norm_inequality(pv_p, pv_x, pair, eta(pair, dx, dp));
    CHECK(check.satisfied);
  }
}

TEST_CASE("violation threshold closed forms and limits") {
  CHECK(violation_threshold(2.0) ==
        doctest::Approx(0.324759526419164492536).epsilon(1e-13));
  CHECK(std::abs(violation_threshold(2.0) - 0.324759526419164492536) < 1e-12);
  CHECK(violation_threshold(1.5) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(violation_threshold(3.0) ==
        doctest::Approx(0.311530996087754279565).epsilon(1e-14));
  CHECK(violation_threshold(5.0) ==
        doctest::Approx(0.296116652914310803684).epsilon(1e-14));
  // inside the alpha = 1 window the analytic limit e/8 is substituted
  CHECK(violation_threshold(1.0) ==
        doctest::Approx(0.33978522855738065442).epsilon(1e-15));
  CHECK(violation_threshold(1.0 + 1e-9) ==
        doctest::Approx(0.33978522855738065442).epsilon(1e-15));
  CHECK(violation_threshold(1.0 + 1e-6) ==
        doctest::Approx(0.33978522855738065442).epsilon(1e-6));
  CHECK_THROWS_AS(violation_threshold(0.99), DomainError);
  CHECK_THROWS_AS(violation_threshold(0.5), DomainError);
}

TEST_CASE("violation threshold stays above a quarter and decreases") {
  double prev = 1.0;
  for (int i = 0; i <= 200; ++i) {
    const double alpha =
        std::exp(std::log(1.0 + 1e-6) +
                 (std::log(1000.0) - std::log(1.0 + 1e-6)) * i / 200.0);
    const double thr = violation_threshold(alpha);
    CHECK(thr >= 0.25);
    CHECK(thr <= prev + 1e-15);
    prev = thr;
  }
  CHECK(violation_threshold(1e6) == doctest::Approx(0.25).epsilon(1e-5));
}
