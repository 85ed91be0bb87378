#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "entropic/bounds.hpp"

namespace entropic {

/// Closed interval for one free parameter.
struct ParameterRange {
  double lo = 0.0;
  double hi = 0.0;
};

/// Gaussian family over which the entropy sum is minimized. A parameter is
/// free when its range is present, otherwise the fixed value is used; p0 is
/// always fixed (the entropy sum is invariant under momentum shifts in the
/// same way it is under position shifts, so one offset suffices).
struct FamilySpec {
  double x0 = 0.0;
  double p0 = 0.0;
  double sigma = 1.0;
  std::optional<ParameterRange> x0_range;
  std::optional<ParameterRange> sigma_range;
};

/// Best point found by the minimization. gap = best_value - bound_value and
/// stays >= -1e-9 whenever the bound is sound. converged reports whether
/// every start collapsed its simplex below 1e-6 diameter (in normalized
/// coordinates) before running out of budget; a false value means the budget
/// was exhausted and best-so-far is returned.
struct Optimum {
  std::vector<double> best_parameters;
  double best_value = 0.0;
  double bound_value = 0.0;
  double gap = 0.0;
  long long evaluations = 0;
  bool converged = false;
};

/// Minimizes renyi(momentum, alpha) + renyi(position, beta) over the family
/// box with a seeded 5-start Nelder-Mead in normalized [0,1]^d coordinates
/// (points folded back at the bounds). Deterministic for a fixed seed, and
/// the per-start iteration schedule is nested so a larger budget never
/// returns a worse value. Requires budget >= 50 and, when sigma is free,
/// sigma_range.lo >= 1e-3 * dx.
Optimum minimize_entropy_sum(const FamilySpec& family, double dx, double dp,
                             double alpha, const PhysicalConstants& consts = {},
                             long long budget = 500,
                             std::uint64_t seed = 0);

}  // namespace entropic
