#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <vector>

#include "entropic/binning.hpp"
#include "entropic/entropy.hpp"
#include "entropic/errors.hpp"
#include "entropic/quadrature.hpp"
#include "entropic/states.hpp"

using namespace entropic;

namespace {

double total(const ProbabilityVector& pv) {
  double sum = pv.tail_mass;
  for (const double p : pv.probs) sum += p;
  return sum;
}

double prob_at(const ProbabilityVector& pv, long long index) {
  const long long offset = index - pv.first_index;
  REQUIRE(offset >= 0);
  REQUIRE(offset < static_cast<long long>(pv.probs.size()));
  return pv.probs[static_cast<std::size_t>(offset)];
}

}  // namespace

TEST_CASE("compactify maps the line onto (-1,1)") {
  for (const double s : {0.5, 1.0, 3.0}) {
    CHECK(compactify(0.0, s) == 0.0);
    CHECK(compactify(s, s) == 0.5);
    CHECK(compactify(-s, s) == -0.5);
  }
  CHECK(compactify(1e308, 1.0) < 1.0);
  CHECK(compactify(1e308, 1.0) > 1.0 - 1e-7);
  CHECK(compactify(std::numeric_limits<double>::infinity(), 2.0) == 1.0);
  CHECK(compactify(-std::numeric_limits<double>::infinity(), 2.0) == -1.0);
  CHECK_THROWS_AS(compactify(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(compactify(1.0, -2.0), DomainError);
}

TEST_CASE("compactify is odd and strictly increasing") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> us(-50.0, 50.0);
  double prev_t = compactify(-60.0, 1.3);
  std::vector<double> pts(40);
  for (auto& u : pts) u = us(rng);
  std::sort(pts.begin(), pts.end());
  for (const double u : pts) {
    const double t = compactify(u, 1.3);
    CHECK(t > prev_t);
    CHECK(compactify(-u, 1.3) == doctest::Approx(-t).epsilon(1e-15));
    prev_t = t;
  }
}

TEST_CASE("decompactify inverts compactify") {
  CHECK(decompactify(0.5, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(decompactify(0.0, 7.0) == 0.0);
  // a = s*dt/(1-dt), the box half-width used by the two-bin scenario
  CHECK(decompactify(0.1, 1.0) == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> us(-30.0, 30.0);
  std::uniform_real_distribution<double> ss(0.2, 4.0);
  for (int i = 0; i < 100; ++i) {
    const double u = us(rng);
    const double s = ss(rng);
    CHECK(std::abs(decompactify(compactify(u, s), s) - u) < 1e-12);
  }
  CHECK_THROWS_AS(decompactify(1.0, 1.0), DomainError);
  CHECK_THROWS_AS(decompactify(-1.0, 2.0), DomainError);
  CHECK_THROWS_AS(decompactify(1.5, 1.0), DomainError);
}

TEST_CASE("compactified jacobian is the derivative of decompactify") {
  CHECK(compactified_jacobian(0.5, 2.0) == doctest::Approx(8.0).epsilon(1e-15));
  CHECK(compactified_jacobian(0.0, 3.0) == doctest::Approx(3.0).epsilon(1e-15));
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> ts(-0.9, 0.9);
  for (int i = 0; i < 20; ++i) {
    const double t = ts(rng);
    const double h = 1e-6;
    const double fd =
        (decompactify(t + h, 1.7) - decompactify(t - h, 1.7)) / (2.0 * h);
    CHECK(compactified_jacobian(t, 1.7) == doctest::Approx(fd).epsilon(1e-7));
  }
  CHECK_THROWS_AS(compactified_jacobian(1.0, 1.0), DomainError);
}

TEST_CASE("half-line bins reproduce the erf split") {
  const GaussianState state(2.0, 2.0, 1.0);
  const auto pos = bin_probabilities(state, Space::position, HalfLineBins{0.0});
  REQUIRE(pos.probs.size() == 2);
  CHECK(pos.first_index == 0);
  CHECK(pos.tail_mass == 0.0);
  CHECK(pos.probs[0] == doctest::Approx(0.002338867490523632919).epsilon(1e-13));
  CHECK(pos.probs[1] == doctest::Approx(0.99766113250947636708).epsilon(1e-15));
  // this state was built so the momentum split has the same masses
  const auto mom = bin_probabilities(state, Space::momentum, HalfLineBins{0.0});
  CHECK(mom.probs[0] == doctest::Approx(pos.probs[0]).epsilon(1e-12));
  CHECK(mom.probs[1] == doctest::Approx(pos.probs[1]).epsilon(1e-12));
}

TEST_CASE("uniform bins of the standard gaussian") {
  const auto pv = bin_probabilities(GaussianState(0.0, 0.0, 1.0),
                                    Space::position, UniformBins{1.0, 0.0});
  CHECK(prob_at(pv, 0) == doctest::Approx(0.421350396474857434671).epsilon(1e-14));
  CHECK(prob_at(pv, -1) == doctest::Approx(0.421350396474857434671).epsilon(1e-14));
  CHECK(prob_at(pv, 1) == doctest::Approx(0.07631073603461893241).epsilon(1e-13));
  CHECK(prob_at(pv, 2) == doctest::Approx(0.00232782224202434019828).epsilon(1e-12));
  CHECK(total(pv) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(pv.tail_mass >= 0.0);
  CHECK(pv.tail_mass < 1e-12);
}

TEST_CASE("uniform binning validates its inputs") {
  const GaussianState state(0.0, 0.0, 1.0);
  CHECK_THROWS_AS(
      bin_probabilities(state, Space::position, UniformBins{0.0, 0.0}),
      DomainError);
  CHECK_THROWS_AS(
      bin_probabilities(state, Space::position, UniformBins{-1.0, 0.0}),
      DomainError);
  CHECK_THROWS_AS(bin_probabilities(state, Space::position,
                                    UniformBins{1.0, 0.0}, {}, 0.0),
                  DomainError);
  CHECK_THROWS_AS(bin_probabilities(state, Space::position,
                                    UniformBins{1.0, 0.0}, {}, 1e-5),
                  DomainError);
}

TEST_CASE("a state inside one bin degenerates to [1]") {
  const auto pv = bin_probabilities(BoxState(0.4), Space::position,
                                    UniformBins{10.0, -5.0});
  REQUIRE(pv.probs.size() == 1);
  CHECK(pv.first_index == 0);
  CHECK(pv.probs[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(shannon(pv) == 0.0);
}

TEST_CASE("refining uniform bins and re-merging reproduces the coarse bins") {
  const GaussianState state(0.3, -0.7, 1.1);
  for (const auto space : {Space::position, Space::momentum}) {
    const auto coarse =
        bin_probabilities(state, space, UniformBins{1.0, 0.0});
    const auto fine = bin_probabilities(state, space, UniformBins{0.5, 0.0});
    for (long long k = coarse.first_index;
         k < coarse.first_index +
                 static_cast<long long>(coarse.probs.size());
         ++k) {
      double merged = 0.0;
      for (const long long half : {2 * k, 2 * k + 1}) {
        const long long offset = half - fine.first_index;
        if (offset >= 0 &&
            offset < static_cast<long long>(fine.probs.size())) {
          merged += fine.probs[static_cast<std::size_t>(offset)];
        }
      }
      CHECK(std::abs(merged - prob_at(coarse, k)) < 1e-10);
    }
  }
}

TEST_CASE("shifting the anchor by a full width only relabels the bins") {
  // both lattices share the same edges; bin k of the base equals bin k-1 of
  // the shifted run wherever either enumeration reached (missing entries hold
  // at most the 1e-12 tail between them)
  const GaussianState state(0.2, 0.0, 0.9);
  const auto base =
      bin_probabilities(state, Space::position, UniformBins{0.7, 0.0});
  const auto shifted =
      bin_probabilities(state, Space::position, UniformBins{0.7, 0.7});
  const auto lookup = [](const ProbabilityVector& pv, long long k) {
    const long long offset = k - pv.first_index;
    if (offset < 0 || offset >= static_cast<long long>(pv.probs.size())) {
      return 0.0;
    }
    return pv.probs[static_cast<std::size_t>(offset)];
  };
  const long long lo = std::min(base.first_index, shifted.first_index + 1);
  const long long hi =
      std::max(base.first_index + static_cast<long long>(base.probs.size()),
               shifted.first_index + 1 +
                   static_cast<long long>(shifted.probs.size()));
  for (long long k = lo; k < hi; ++k) {
    CHECK(std::abs(lookup(base, k) - lookup(shifted, k - 1)) < 2e-12);
  }
  CHECK(std::abs(shannon(base) - shannon(shifted)) < 1e-8);
}

TEST_CASE("the two-bin box fills exactly two compactified bins") {
  const BoxState box(1.0 / 9.0);  // a = s*dt/(1-dt) at s=1, dt=0.1
  const auto pv = bin_probabilities(box, Space::position,
                                    CompactifiedBins{1.0, 0.1});
  REQUIRE(pv.probs.size() == 20);
  CHECK(pv.first_index == -10);
  CHECK(pv.tail_mass == 0.0);
  CHECK(prob_at(pv, -1) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(prob_at(pv, 0) == doctest::Approx(0.5).epsilon(1e-12));
  for (long long k = -10; k < 10; ++k) {
    if (k == -1 || k == 0) continue;
    CHECK(prob_at(pv, k) < 1e-15);
  }
}

TEST_CASE("momentum half-cover yields two half bins for any scale") {
  for (const double sp : {0.5, 1.0, 2.0}) {
    const auto pv = bin_probabilities(BoxState(0.8), Space::momentum,
                                      CompactifiedBins{sp, 1.0});
    REQUIRE(pv.probs.size() == 2);
    CHECK(pv.first_index == -1);
    CHECK(pv.probs[0] == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(pv.probs[1] == doctest::Approx(0.5).epsilon(1e-8));
  }
}

TEST_CASE("bin widths that do not divide the cover get clipped outer bins") {
  // dt = 0.3: lattice needs ceil(1/0.3) = 4 bins per side
  const auto pv = bin_probabilities(GaussianState(0.0, 0.0, 1.0),
                                    Space::position,
                                    CompactifiedBins{1.0, 0.3});
  REQUIRE(pv.probs.size() == 8);
  CHECK(pv.first_index == -4);
  CHECK(total(pv) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(bin_probabilities(GaussianState(0.0, 0.0, 1.0),
                                    Space::position,
                                    CompactifiedBins{1.0, 1.5}),
                  DomainError);
  CHECK_THROWS_AS(bin_probabilities(GaussianState(0.0, 0.0, 1.0),
                                    Space::position,
                                    CompactifiedBins{0.0, 0.5}),
                  DomainError);
}

TEST_CASE("preimage integration equals the jacobian-weighted t integral") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> centers(-2.0, 2.0);
  std::uniform_real_distribution<double> sigmas(0.5, 2.0);
  std::uniform_real_distribution<double> scales(0.5, 3.0);
  std::uniform_real_distribution<double> widths(0.07, 0.6);
  for (int trial = 0; trial < 20; ++trial) {
    const GaussianState state(centers(rng), centers(rng), sigmas(rng));
    const double s = scales(rng);
    const double dt = widths(rng);
    const auto pv = bin_probabilities(state, Space::position,
                                      CompactifiedBins{s, dt});
    const auto m = static_cast<long long>(std::ceil((1.0 - 1e-12) / dt));
    REQUIRE(pv.first_index == -m);
    for (long long k = -m; k < m; ++k) {
      const double t_lo = std::max(static_cast<double>(k) * dt, -1.0);
      const double t_hi = std::min(static_cast<double>(k + 1) * dt, 1.0);
      const double direct =
          integrate(
              [&](double t) {
                return position_density(state, decompactify(t, s)) *
                       compactified_jacobian(t, s);
              },
              t_lo, t_hi, 1e-10)
              .value;
      CHECK(std::abs(prob_at(pv, k) - direct) < 1e-7);
    }
  }
}

TEST_CASE("box momentum uniform bins need the loose tail budget") {
  // the 1/p^2 momentum tail cannot reach 1 - 1e-12 in any sane bin count
  const auto pv = bin_probabilities(BoxState(1.0), Space::momentum,
                                    UniformBins{2.0, 0.0}, {}, 1e-6);
  CHECK(total(pv) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(pv.tail_mass > 0.0);
  CHECK(pv.tail_mass <= 1e-6);
}

TEST_CASE("support exit leaves unreachable interpolation mass in the tail") {
  // flat |amp|^2 = 0.5 on 8 nodes: the piecewise-linear interpolant only
  // carries 7 of the 8 cells, so 1/8 of the discrete mass is unreachable
  const double amp = std::sqrt(0.5);
  std::vector<std::complex<double>> amps(8, {amp, 0.0});
  const SampledState flat(0.0, 0.25, amps);
  const auto pv = bin_probabilities(flat, Space::position,
                                    UniformBins{10.0, -5.0});
  REQUIRE(pv.probs.size() == 1);
  CHECK(pv.probs[0] == doctest::Approx(0.875).epsilon(1e-12));
  CHECK(pv.tail_mass == doctest::Approx(0.125).epsilon(1e-12));
}
