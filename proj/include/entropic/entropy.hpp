#pragma once

#include "entropic/binning.hpp"

namespace entropic {

/// Conjugate pair of entropy orders with 1/alpha + 1/beta = 2.
class EntropyOrderPair {
 public:
  /// Validates alpha, beta > 0 and the conjugacy relation to 1e-12.
  EntropyOrderPair(double alpha, double beta);

  /// Builds the pair from alpha alone, beta = alpha/(2*alpha - 1).
  /// Requires alpha > 1/2 so that beta is finite and positive.
  static EntropyOrderPair from_alpha(double alpha);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

 private:
  double alpha_;
  double beta_;
};

/// -Sum p ln p in nats, with 0 ln 0 := 0. tail_mass is excluded.
double shannon(const ProbabilityVector& pv);

/// (1/(1-alpha)) ln Sum p^alpha in nats; falls back to shannon() inside the
/// window |alpha - 1| < 1e-6 where the direct formula loses precision.
double renyi(const ProbabilityVector& pv, double alpha);

/// (1 - Sum p^q)/(q - 1); q = 1 returns shannon().
double tsallis(const ProbabilityVector& pv, double q);

/// (Sum p^order)^(1/order).
double norm_sum(const ProbabilityVector& pv, double order);

/// Absolute change each functional would incur if tail_mass were appended as
/// one extra bin. Callers assert these stay below their tolerance instead of
/// pretending truncated tails are exact.
double shannon_tail_bound(const ProbabilityVector& pv);
double renyi_tail_bound(const ProbabilityVector& pv, double alpha);
double tsallis_tail_bound(const ProbabilityVector& pv, double q);
double norm_sum_tail_bound(const ProbabilityVector& pv, double order);

}  // namespace entropic
