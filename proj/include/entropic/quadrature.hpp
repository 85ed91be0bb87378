#pragma once

#include <functional>

namespace entropic {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions = 0;
};

/// Adaptive Gauss-Kronrod (7-15) integration of f over the finite interval
/// [a, b] to the given absolute tolerance. Bisects until each panel's
/// Gauss/Kronrod discrepancy is below its share of the tolerance; throws
/// NonconvergedQuadrature once max_depth bisection levels are exhausted.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double abs_tol = 1e-12,
                           int max_depth = 48);

}  // namespace entropic
