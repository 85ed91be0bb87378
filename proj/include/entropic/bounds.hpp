#pragma once

#include <string>

#include "entropic/constants.hpp"
#include "entropic/entropy.hpp"

namespace entropic {

/// Result of testing lhs >= rhs with a fixed tolerance band so checks do not
/// flap on rounding noise.
struct BoundCheck {
  static constexpr double kTolerance = 1e-9;

  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  bool satisfied = false;
  std::string context;

  static BoundCheck of(double lhs, double rhs, std::string context);
};

/// beta with 1/alpha + 1/beta = 2. Throws DomainError for alpha <= 1/2.
double conjugate_order(double alpha);

/// Lower bound on the binned Renyi entropy sum,
/// -(1/2)(ln(a)/(1-a) + ln(b)/(1-b)) - ln(dx*dp/(pi*hbar)),
/// with each order term replaced by its analytic limit -1 at order 1.
double renyi_bound(const EntropyOrderPair& pair, double dx, double dp,
                   const PhysicalConstants& consts = {});

/// Shannon specialization of the bound above: -ln(2*dx*dp/(e*h)).
double shannon_bound(double dx, double dp, const PhysicalConstants& consts = {});

/// The flawed competing bound -ln((2/e)*dx*dp/(h + dx*dp)). Stays positive
/// for every bin size and tends to 1 - ln 2 as dx*dp grows.
double ww_bound(double dx, double dp, const PhysicalConstants& consts = {});

/// Additive constant fixed by the choice of length unit a: 1 - ln 2 - 2 ln a.
/// Unbounded below as a grows, which is what breaks the bound above.
double ww_offset(double a);

/// Prefactor eta(alpha, beta) = (beta/alpha)^(1/(2 alpha))
/// * (2 beta dx dp / h)^(1 - 1/alpha) of the proven norm inequality.
/// Restricted to alpha >= 1.
double eta(const EntropyOrderPair& pair, double dx, double dp,
           const PhysicalConstants& consts = {});

/// Dimensionless eta for compactified bin widths dt_x, dt_p in (0, 1]:
/// (beta/alpha)^(1/(2 alpha)) * (2 beta dt_x dt_p)^(1 - 1/alpha).
/// Restricted to alpha >= 1.
double eta_compactified(const EntropyOrderPair& pair, double dt_x,
                        double dt_p);

/// Tests -(Sum p^alpha)^(1/alpha) >= -eta_value * (Sum x^beta)^(1/beta)
/// for momentum probabilities pv_p and position probabilities pv_x.
BoundCheck check_norm_inequality(const ProbabilityVector& pv_p,
                                 const ProbabilityVector& pv_x,
                                 const EntropyOrderPair& pair,
                                 double eta_value);

/// Smallest compactified bin width dt_x at which the two-bin box state stops
/// violating the patterned inequality:
/// (1/(8 alpha)) * (2 alpha - 1)^((2 alpha - 1)/(2 alpha - 2)).
/// Returns the analytic limit e/8 within 1e-8 of alpha = 1; always > 1/4.
double violation_threshold(double alpha);

}  // namespace entropic
