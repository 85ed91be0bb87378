#include "entropic/binning.hpp"

#include <cmath>
#include <deque>
#include <limits>

#include "entropic/errors.hpp"

namespace entropic {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_scale(double s) {
  if (!(s > 0.0)) throw DomainError("compactification scale must be positive");
}

ProbabilityVector bin_uniform(const QuantumState& state, Space space,
                              const UniformBins& spec,
                              const PhysicalConstants& consts,
                              double tail_eps) {
  if (!(spec.width > 0.0)) throw DomainError("bin width must be positive");
  if (!(tail_eps > 0.0 && tail_eps <= 1e-6)) {
    throw DomainError("tail_eps must lie in (0, 1e-6]");
  }
  const auto edge = [&](long long k) {
    return spec.anchor + spec.width * static_cast<double>(k);
  };
  const auto mass = [&](long long k) {
    return interval_probability(state, space, edge(k), edge(k + 1), consts);
  };

  const auto [support_lo, support_hi] = support_bounds(state, space, consts);

  std::deque<double> probs{mass(0)};
  double captured = probs.front();
  long long ring = 0;
  constexpr long long kMaxRings = 2'000'000;
  while (captured < 1.0 - tail_eps) {
    // bins past the support are exactly zero; whatever mass the sampled
    // interpolant (or rounding) left unreachable goes to tail_mass
    if (edge(-ring) <= support_lo && edge(ring + 1) >= support_hi) break;
    if (++ring > kMaxRings) {
      throw NonconvergedQuadrature(
          "uniform binning failed to capture 1 - tail_eps");
    }
    const double left = mass(-ring);
    const double right = mass(ring);
    probs.push_front(left);
    probs.push_back(right);
    captured += left + right;
  }

  ProbabilityVector out;
  out.probs.assign(probs.begin(), probs.end());
  out.first_index = -ring;
  out.tail_mass = std::max(0.0, 1.0 - captured);
  return out;
}

ProbabilityVector bin_half_lines(const QuantumState& state, Space space,
                                 const HalfLineBins& spec,
                                 const PhysicalConstants& consts) {
  ProbabilityVector out;
  out.probs = {interval_probability(state, space, -kInf, spec.split, consts),
               interval_probability(state, space, spec.split, kInf, consts)};
  return out;
}

ProbabilityVector bin_compactified(const QuantumState& state, Space space,
                                   const CompactifiedBins& spec,
                                   const PhysicalConstants& consts) {
  require_scale(spec.s);
  if (!(spec.dt > 0.0 && spec.dt <= 1.0)) {
    throw DomainError("compactified bin width must lie in (0, 1]");
  }
  // smallest lattice reaching |t| = 1; when dt does not divide 1 the
  // outermost bins are clipped to the cover (-1, 1)
  const auto m =
      static_cast<long long>(std::ceil((1.0 - 1e-12) / spec.dt));

  // bins k = -m .. m-1 tile (-1, 1); the outermost preimages reach +-inf
  ProbabilityVector out;
  out.first_index = -m;
  out.probs.reserve(static_cast<std::size_t>(2 * m));
  for (long long k = -m; k < m; ++k) {
    const double lo = (k == -m)
                          ? -kInf
                          : decompactify(static_cast<double>(k) * spec.dt,
                                         spec.s);
    const double hi = (k == m - 1)
                          ? kInf
                          : decompactify(static_cast<double>(k + 1) * spec.dt,
                                         spec.s);
    out.probs.push_back(interval_probability(state, space, lo, hi, consts));
  }
  return out;
}

}  // namespace

double compactify(double u, double s) {
  require_scale(s);
  if (std::isinf(u)) return u > 0.0 ? 1.0 : -1.0;
  const double t = u / (std::abs(u) + s);
  // the quotient rounds to +-1 once |u|/s outgrows 1/eps; keep finite inputs
  // strictly inside the cover so decompactify stays legal on them
  if (t >= 1.0) return std::nextafter(1.0, 0.0);
  if (t <= -1.0) return std::nextafter(-1.0, 0.0);
  return t;
}

double decompactify(double t, double s) {
  require_scale(s);
  if (!(std::abs(t) < 1.0)) {
    throw DomainError("decompactify requires |t| < 1");
  }
  return s * t / (1.0 - std::abs(t));
}

double compactified_jacobian(double t, double s) {
  require_scale(s);
  if (!(std::abs(t) < 1.0)) {
    throw DomainError("compactified_jacobian requires |t| < 1");
  }
  const double denom = 1.0 - std::abs(t);
  return s / (denom * denom);
}

ProbabilityVector bin_probabilities(const QuantumState& state, Space space,
                                    const BinSpec& spec,
                                    const PhysicalConstants& consts,
                                    double tail_eps) {
  return std::visit(
      [&](const auto& sp) {
        using T = std::decay_t<decltype(sp)>;
        if constexpr (std::is_same_v<T, UniformBins>) {
          return bin_uniform(state, space, sp, consts, tail_eps);
        } else if constexpr (std::is_same_v<T, HalfLineBins>) {
          return bin_half_lines(state, space, sp, consts);
        } else {
          return bin_compactified(state, space, sp, consts);
        }
      },
      spec);
}

}  // namespace entropic
