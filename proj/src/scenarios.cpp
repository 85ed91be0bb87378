#include "entropic/scenarios.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "entropic/errors.hpp"

namespace entropic {
namespace {

constexpr double kWwLimit = 1.0 - std::numbers::ln2;
constexpr double kAgreementTol = 1e-8;

// Renyi entropy of the two-bin distribution {c/2, 1 - c/2}, c = erfc(delta).
double two_bin_renyi(double c, double order) {
  const double p_small = 0.5 * c;
  const double p_large = 1.0 - p_small;
  if (std::abs(order - 1.0) < 1e-6) {
    double h = -p_large * std::log(p_large);
    if (p_small > 0.0) h -= p_small * std::log(p_small);
    return h;
  }
  const double sum = std::pow(p_small, order) + std::pow(p_large, order);
  return std::log(sum) / (1.0 - order);
}

std::string describe_gaussian(const GaussianScenarioParams& params) {
  char buf[128];
  if (params.alpha == 1.0) {
    std::snprintf(buf, sizeof(buf), "gaussian half-line scenario: delta=%g",
                  params.delta);
  } else {
    std::snprintf(buf, sizeof(buf),
                  "gaussian half-line scenario: delta=%g "
                  "(conjugate-order extension: alpha=%g)",
                  params.delta, params.alpha);
  }
  return buf;
}

std::string describe_box(const BoxScenarioParams& params) {
  char buf[128];
  std::snprintf(buf, sizeof(buf),
                "box compactified scenario: s_x=%g dt_x=%g alpha=%g",
                params.s_x, params.dt_x, params.alpha);
  return buf;
}

void require_half(double p, const char* what) {
  if (std::abs(p - 0.5) > kAgreementTol) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%s deviates from 1/2 by %g", what,
                  std::abs(p - 0.5));
    throw InvalidScenario(buf);
  }
}

}  // namespace

double gaussian_two_bin_entropy_sum(double delta) {
  if (!(delta >= 0.0)) throw DomainError("delta must be nonnegative");
  const double c = std::erfc(delta);  // 1 - erf(delta), in (0, 1]
  double sum = 2.0 * std::numbers::ln2 - (2.0 - c) * std::log(2.0 - c);
  if (c > 0.0) sum -= c * std::log(c);
  return sum;
}

ViolationReport run_gaussian_counterexample(const GaussianScenarioParams& params,
                                            const PhysicalConstants& consts) {
  if (!(params.delta >= 0.0)) throw DomainError("delta must be nonnegative");
  if (!(params.alpha >= 1.0)) {
    throw DomainError("scenario order requires alpha >= 1");
  }
  const EntropyOrderPair pair = EntropyOrderPair::from_alpha(params.alpha);

  const double root_hbar = std::sqrt(consts.hbar());
  const GaussianState state(params.delta * root_hbar, params.delta * root_hbar,
                            root_hbar);
  const HalfLineBins split{0.0};
  const auto pv_x = bin_probabilities(state, Space::position, split, consts);
  const auto pv_p = bin_probabilities(state, Space::momentum, split, consts);

  ViolationReport report;
  report.pipeline_value =
      renyi(pv_p, pair.alpha()) + renyi(pv_x, pair.beta());
  const double c = std::erfc(params.delta);
  report.closed_form_value =
      two_bin_renyi(c, pair.alpha()) + two_bin_renyi(c, pair.beta());
  report.reference_bound = kWwLimit;
  report.agreement_error =
      std::abs(report.closed_form_value - report.pipeline_value);
  if (report.agreement_error >= kAgreementTol) {
    throw InvalidScenario(
        "pipeline entropy sum disagrees with the closed form");
  }
  report.violated =
      !BoundCheck::of(report.pipeline_value, report.reference_bound, "")
           .satisfied;
  report.details = describe_gaussian(params);
  return report;
}

ViolationReport run_box_counterexample(const BoxScenarioParams& params,
                                       const PhysicalConstants& consts) {
  if (!(params.s_x > 0.0) || !(params.s_p > 0.0)) {
    throw DomainError("compactification scales must be positive");
  }
  if (!(params.dt_x > 0.0 && params.dt_x <= 0.5)) {
    throw DomainError("dt_x must lie in (0, 1/2]");
  }
  if (!(params.alpha > 1.0)) throw DomainError("alpha must exceed 1");
  const EntropyOrderPair pair = EntropyOrderPair::from_alpha(params.alpha);

  // the box fills the preimage of exactly the bins [-dt_x, 0) and [0, dt_x)
  const double a = params.s_x * params.dt_x / (1.0 - params.dt_x);
  const BoxState box(a);
  const auto pv_x = bin_probabilities(
      box, Space::position, CompactifiedBins{params.s_x, params.dt_x}, consts);
  const auto pv_p = bin_probabilities(
      box, Space::momentum, CompactifiedBins{params.s_p, 1.0}, consts);

  for (std::size_t i = 0; i < pv_x.probs.size(); ++i) {
    const long long k = pv_x.first_index + static_cast<long long>(i);
    if (k == -1 || k == 0) {
      require_half(pv_x.probs[i], "central position bin");
    } else if (pv_x.probs[i] > kAgreementTol) {
      throw InvalidScenario("box mass leaked outside the two central bins");
    }
  }
  require_half(pv_p.probs.at(0), "momentum half-line bin");
  require_half(pv_p.probs.at(1), "momentum half-line bin");

  const double eta_value = eta_compactified(pair, params.dt_x, 1.0);
  const BoundCheck check = check_norm_inequality(pv_p, pv_x, pair, eta_value);

  ViolationReport report;
  report.reference_bound = check.lhs;
  report.pipeline_value = check.rhs;
  report.closed_form_value =
      -eta_value * std::pow(2.0, (1.0 - pair.beta()) / pair.beta());
  report.agreement_error =
      std::abs(report.closed_form_value - report.pipeline_value);
  report.violated = !check.satisfied;
  report.threshold = violation_threshold(params.alpha);
  report.details = describe_box(params);

  if (std::abs(params.dt_x - *report.threshold) > 1e-6 &&
      report.violated != (params.dt_x < *report.threshold)) {
    throw InvalidScenario(
        "violation flag contradicts the closed-form threshold");
  }
  return report;
}

BoundCheck run_renyi_ur_check(const QuantumState& state, double dx, double dp,
                              double alpha, const PhysicalConstants& consts) {
  if (!(alpha >= 1.0)) throw DomainError("alpha must be at least 1");
  const EntropyOrderPair pair = EntropyOrderPair::from_alpha(alpha);
  // the box momentum tail decays like 1/p^2, so capturing 1 - 1e-12 of it
  // would need ~1e11 bins; 1e-6 keeps the truncation orders of magnitude
  // below the check tolerance while staying enumerable
  const double tail_eps =
      std::holds_alternative<BoxState>(state) ? 1e-6 : 1e-12;
  const auto pv_p = bin_probabilities(state, Space::momentum,
                                      UniformBins{dp, 0.0}, consts, tail_eps);
  const auto pv_x = bin_probabilities(state, Space::position,
                                      UniformBins{dx, 0.0}, consts, tail_eps);
  const double lhs = renyi(pv_p, pair.alpha()) + renyi(pv_x, pair.beta());
  const double rhs = renyi_bound(pair, dx, dp, consts);
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "renyi uncertainty relation: alpha=%.6g beta=%.6g dx=%.6g "
                "dp=%.6g",
                pair.alpha(), pair.beta(), dx, dp);
  return BoundCheck::of(lhs, rhs, buf);
}

}  // namespace entropic
