#include "entropic/entropy.hpp"

#include <cmath>

#include "entropic/errors.hpp"

namespace entropic {
namespace {

constexpr double kShannonWindow = 1e-6;

void validate(const ProbabilityVector& pv) {
  for (const double p : pv.probs) {
    if (!(p >= 0.0)) throw DomainError("probabilities must be nonnegative");
  }
  if (!(pv.tail_mass >= 0.0)) {
    throw DomainError("tail_mass must be nonnegative");
  }
}

double power_sum(const ProbabilityVector& pv, double order) {
  double sum = 0.0;
  for (const double p : pv.probs) {
    if (p > 0.0) sum += std::pow(p, order);
  }
  return sum;
}

ProbabilityVector with_tail_as_bin(const ProbabilityVector& pv) {
  ProbabilityVector out = pv;
  if (out.tail_mass > 0.0) out.probs.push_back(out.tail_mass);
  out.tail_mass = 0.0;
  return out;
}

}  // namespace

EntropyOrderPair::EntropyOrderPair(double alpha, double beta)
    : alpha_(alpha), beta_(beta) {
  if (!(alpha > 0.0) || !(beta > 0.0)) {
    throw DomainError("entropy orders must be positive");
  }
  if (std::abs(1.0 / alpha + 1.0 / beta - 2.0) > 1e-12) {
    throw DomainError("entropy orders must satisfy 1/alpha + 1/beta = 2");
  }
}

EntropyOrderPair EntropyOrderPair::from_alpha(double alpha) {
  if (!(alpha > 0.5)) {
    throw DomainError("conjugate order requires alpha > 1/2");
  }
  return EntropyOrderPair(alpha, alpha / (2.0 * alpha - 1.0));
}

double shannon(const ProbabilityVector& pv) {
  validate(pv);
  double h = 0.0;
  for (const double p : pv.probs) {
    if (p > 0.0) h -= p * std::log(p);
  }
  return h;
}

double renyi(const ProbabilityVector& pv, double alpha) {
  if (!(alpha > 0.0)) throw DomainError("renyi order must be positive");
  if (std::abs(alpha - 1.0) < kShannonWindow) return shannon(pv);
  validate(pv);
  return std::log(power_sum(pv, alpha)) / (1.0 - alpha);
}

double tsallis(const ProbabilityVector& pv, double q) {
  if (!(q > 0.0)) throw DomainError("tsallis order must be positive");
  if (q == 1.0) return shannon(pv);
  validate(pv);
  return (1.0 - power_sum(pv, q)) / (q - 1.0);
}

double norm_sum(const ProbabilityVector& pv, double order) {
  if (!(order > 0.0)) throw DomainError("norm order must be positive");
  validate(pv);
  return std::pow(power_sum(pv, order), 1.0 / order);
}

double shannon_tail_bound(const ProbabilityVector& pv) {
  validate(pv);
  const double t = pv.tail_mass;
  return t > 0.0 ? -t * std::log(t) : 0.0;
}

double renyi_tail_bound(const ProbabilityVector& pv, double alpha) {
  if (pv.tail_mass <= 0.0) return 0.0;
  return std::abs(renyi(with_tail_as_bin(pv), alpha) - renyi(pv, alpha));
}

double tsallis_tail_bound(const ProbabilityVector& pv, double q) {
  if (pv.tail_mass <= 0.0) return 0.0;
  return std::abs(tsallis(with_tail_as_bin(pv), q) - tsallis(pv, q));
}

double norm_sum_tail_bound(const ProbabilityVector& pv, double order) {
  if (pv.tail_mass <= 0.0) return 0.0;
  return std::abs(norm_sum(with_tail_as_bin(pv), order) - norm_sum(pv, order));
}

}  // namespace entropic
