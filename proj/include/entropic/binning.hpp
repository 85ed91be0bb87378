#pragma once

#include <variant>
#include <vector>

#include "entropic/constants.hpp"
#include "entropic/states.hpp"

namespace entropic {

/// Maps u in (-inf, inf) to t = u/(|u| + s) in (-1, 1); odd, strictly
/// increasing, with compactify(s, s) = 1/2.
double compactify(double u, double s);

/// Inverse map t -> s*t/(1 - |t|). Throws DomainError unless |t| < 1.
double decompactify(double t, double s);

/// du/dt of the inverse map, s/(1 - |t|)^2. Throws DomainError unless |t| < 1.
double compactified_jacobian(double t, double s);

/// Uniform lattice of bins [anchor + k*width, anchor + (k+1)*width).
struct UniformBins {
  double width = 1.0;
  double anchor = 0.0;
};

/// Two bins (-inf, split) and [split, inf).
struct HalfLineBins {
  double split = 0.0;
};

/// Uniform lattice of width dt in the compactified variable t, anchored at
/// t = 0 and covering (-1, 1); when dt does not divide 1 the outermost bins
/// are clipped to the cover.
struct CompactifiedBins {
  double s = 1.0;
  double dt = 1.0;
};

using BinSpec = std::variant<UniformBins, HalfLineBins, CompactifiedBins>;

/// Probabilities for a contiguous index range of bins. Bin k of the spec is
/// probs[k - first_index]; tail_mass is whatever the enumeration left outside
/// that range (zero for HalfLineBins and CompactifiedBins).
struct ProbabilityVector {
  std::vector<double> probs;
  long long first_index = 0;
  double tail_mass = 0.0;
};

/// Bins the state's position or momentum density. Uniform lattices are
/// enumerated outward from the anchor bin until the captured mass reaches
/// 1 - tail_eps (pre: 0 < tail_eps <= 1e-6); the other schemes cover the whole
/// line and ignore tail_eps. Compactified bins integrate the original density
/// over decompactified preimages, which substitutes away the (1-|t|)^-2
/// Jacobian singularity at the cover's edges.
ProbabilityVector bin_probabilities(const QuantumState& state, Space space,
                                    const BinSpec& spec,
                                    const PhysicalConstants& consts = {},
                                    double tail_eps = 1e-12);

}  // namespace entropic
