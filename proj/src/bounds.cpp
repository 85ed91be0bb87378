#include "entropic/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "entropic/errors.hpp"

namespace entropic {
namespace {

void require_positive_widths(double dx, double dp) {
  if (!(dx > 0.0) || !(dp > 0.0)) {
    throw DomainError("bin widths must be positive");
  }
}

// ln(order)/(1 - order), continued through the removable singularity at 1.
double order_term(double order) {
  const double eps = order - 1.0;
  if (eps == 0.0) return -1.0;
  return -std::log1p(eps) / eps;
}

void require_alpha_at_least_one(const EntropyOrderPair& pair) {
  if (pair.alpha() < 1.0) {
    throw DomainError("eta prefactor is only validated for alpha >= 1");
  }
}

std::string format_context(const char* name, const EntropyOrderPair& pair,
                           double eta_value) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%s: alpha=%.6g beta=%.6g eta=%.6g", name,
                pair.alpha(), pair.beta(), eta_value);
  return buf;
}

}  // namespace

BoundCheck BoundCheck::of(double lhs, double rhs, std::string context) {
  BoundCheck check;
  check.lhs = lhs;
  check.rhs = rhs;
  check.margin = lhs - rhs;
  check.satisfied = check.margin >= -kTolerance;
  check.context = std::move(context);
  return check;
}

double conjugate_order(double alpha) {
  if (!(alpha > 0.5)) {
    throw DomainError("conjugate order requires alpha > 1/2");
  }
  return alpha / (2.0 * alpha - 1.0);
}

double renyi_bound(const EntropyOrderPair& pair, double dx, double dp,
                   const PhysicalConstants& consts) {
  require_positive_widths(dx, dp);
  const double order_part =
      -0.5 * (order_term(pair.alpha()) + order_term(pair.beta()));
  return order_part - std::log(dx * dp / (std::numbers::pi * consts.hbar()));
}

double shannon_bound(double dx, double dp, const PhysicalConstants& consts) {
  require_positive_widths(dx, dp);
  return 1.0 - std::log(2.0 * dx * dp / consts.h());
}

double ww_bound(double dx, double dp, const PhysicalConstants& consts) {
  require_positive_widths(dx, dp);
  const double product = dx * dp;
  if (std::isinf(product)) return 1.0 - std::numbers::ln2;
  return 1.0 - std::numbers::ln2 + std::log1p(consts.h() / product);
}

double ww_offset(double a) {
  if (!(a > 0.0)) throw DomainError("length unit must be positive");
  return 1.0 - std::numbers::ln2 - 2.0 * std::log(a);
}

double eta(const EntropyOrderPair& pair, double dx, double dp,
           const PhysicalConstants& consts) {
  require_alpha_at_least_one(pair);
  require_positive_widths(dx, dp);
  const double a = pair.alpha();
  const double b = pair.beta();
  return std::pow(b / a, 0.5 / a) *
         std::pow(2.0 * b * dx * dp / consts.h(), 1.0 - 1.0 / a);
}

double eta_compactified(const EntropyOrderPair& pair, double dt_x,
                        double dt_p) {
  require_alpha_at_least_one(pair);
  if (!(dt_x > 0.0 && dt_x <= 1.0) || !(dt_p > 0.0 && dt_p <= 1.0)) {
    throw DomainError("compactified bin widths must lie in (0, 1]");
  }
  const double a = pair.alpha();
  const double b = pair.beta();
  return std::pow(b / a, 0.5 / a) *
         std::pow(2.0 * b * dt_x * dt_p, 1.0 - 1.0 / a);
}

BoundCheck check_norm_inequality(const ProbabilityVector& pv_p,
                                 const ProbabilityVector& pv_x,
                                 const EntropyOrderPair& pair,
                                 double eta_value) {
  if (!(eta_value > 0.0)) throw DomainError("eta must be positive");
  const double lhs = -norm_sum(pv_p, pair.alpha());
  const double rhs = -eta_value * norm_sum(pv_x, pair.beta());
  return BoundCheck::of(lhs, rhs,
                        format_context("norm inequality", pair, eta_value));
}

double violation_threshold(double alpha) {
  if (std::abs(alpha - 1.0) <= 1e-8) return std::numbers::e / 8.0;
  if (alpha < 1.0) {
    throw DomainError("violation threshold requires alpha > 1");
  }
  const double eps = alpha - 1.0;
  // (2 alpha - 1)^((2 alpha - 1)/(2 alpha - 2)) via log1p for stability near 1
  const double exponent = (2.0 * alpha - 1.0) / (2.0 * eps);
  return std::exp(exponent * std::log1p(2.0 * eps)) / (8.0 * alpha);
}

}  // namespace entropic
