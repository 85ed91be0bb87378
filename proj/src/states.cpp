#include "entropic/states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "entropic/errors.hpp"
#include "entropic/quadrature.hpp"

namespace entropic {
namespace {

constexpr double kPi = std::numbers::pi;

double abs2(const std::complex<double>& z) { return std::norm(z); }

// CDF(zhi) - CDF(zlo) for the standard erf profile CDF(z) = (1 + erf z)/2,
// using the complementary branch when both endpoints sit in one tail.
double erf_interval(double zlo, double zhi) {
  if (zlo >= 0.0) return 0.5 * (std::erfc(zlo) - std::erfc(zhi));
  if (zhi <= 0.0) return 0.5 * (std::erfc(-zhi) - std::erfc(-zlo));
  return 0.5 * (std::erf(zhi) - std::erf(zlo));
}

double sinc_sq(double v) {
  if (v == 0.0) return 1.0;
  const double t = std::sin(v) / v;
  return t * t;
}

// pi/2 - Si(z) by the asymptotic expansion; |error| < 1e-15 for z >= 80.
double si_remainder(double z) {
  const double w = 1.0 / (z * z);
  const double f =
      (1.0 + w * (-2.0 + w * (24.0 + w * (-720.0 +
                                          w * (40320.0 - w * 3628800.0))))) /
      z;
  const double g =
      (1.0 + w * (-6.0 + w * (120.0 + w * (-5040.0 +
                                           w * (362880.0 - w * 39916800.0))))) *
      w;
  return std::cos(z) * f + std::sin(z) * g;
}

// I(u) = integral of sinc^2 over [0, u], u >= 0. The oscillatory range is
// integrated panel-by-panel between the zeros k*pi; past the switchover the
// complement pi/2 - I(u) equals sin^2(u)/u + (pi/2 - Si(2u)) by parts, which
// the asymptotic remainder evaluates to machine precision.
constexpr double kSincTailSwitch = 40.0;

double sinc_sq_integral(double u) {
  if (u <= 0.0) return 0.0;
  if (u <= kSincTailSwitch) {
    double total = 0.0;
    double lo = 0.0;
    for (int k = 1; lo < u; ++k) {
      const double hi = std::min(u, k * kPi);
      if (hi > lo) {
        total += integrate(sinc_sq, lo, hi, 1e-12).value;
      }
      lo = hi;
    }
    return total;
  }
  const double s = std::sin(u);
  return 0.5 * kPi - (s * s / u + si_remainder(2.0 * u));
}

// Signed cumulative box-momentum mass from 0 to p, in [-1/2, 1/2].
double box_momentum_cumulative(double half_width, double hbar, double p) {
  if (p == 0.0) return 0.0;
  if (std::isinf(p)) return p > 0.0 ? 0.5 : -0.5;
  const double u = half_width * std::abs(p) / hbar;
  const double mass = sinc_sq_integral(u) / kPi;
  return p > 0.0 ? mass : -mass;
}

double sampled_density_at(const SampledState& s, double x) {
  const double t = (x - s.grid_start()) / s.spacing();
  if (t < 0.0 || t > static_cast<double>(s.size() - 1)) return 0.0;
  const auto i = std::min(static_cast<std::size_t>(t), s.size() - 2);
  const double frac = t - static_cast<double>(i);
  const double d0 = abs2(s.amplitudes()[i]);
  const double d1 = abs2(s.amplitudes()[i + 1]);
  return d0 + (d1 - d0) * frac;
}

// Exact integral of the piecewise-linear density interpolant over [lo, hi].
double sampled_interval(const SampledState& s, double lo, double hi) {
  const double h = s.spacing();
  const double xfirst = s.grid_start();
  const double xlast = s.grid_point(s.size() - 1);
  lo = std::max(lo, xfirst);
  hi = std::min(hi, xlast);
  if (!(lo < hi)) return 0.0;

  const auto cell_of = [&](double x) {
    const auto i = static_cast<std::size_t>(
        std::max(0.0, std::floor((x - xfirst) / h)));
    return std::min(i, s.size() - 2);
  };
  const auto piece = [&](std::size_t i, double a, double b) {
    const double xi = s.grid_point(i);
    const double d0 = abs2(s.amplitudes()[i]);
    const double d1 = abs2(s.amplitudes()[i + 1]);
    const auto value = [&](double x) { return d0 + (d1 - d0) * (x - xi) / h; };
    return (b - a) * 0.5 * (value(a) + value(b));
  };

  const std::size_t i0 = cell_of(lo);
  const std::size_t i1 = cell_of(hi);
  if (i0 == i1) return piece(i0, lo, hi);

  double total = piece(i0, lo, s.grid_point(i0 + 1));
  for (std::size_t i = i0 + 1; i < i1; ++i) {
    total += 0.5 * h * (abs2(s.amplitudes()[i]) + abs2(s.amplitudes()[i + 1]));
  }
  total += piece(i1, s.grid_point(i1), hi);
  return total;
}

std::vector<std::complex<double>> dft(std::vector<std::complex<double>> a) {
  const std::size_t n = a.size();
  if ((n & (n - 1)) == 0) {
    // iterative radix-2, kernel exp(-2 pi i j k / n)
    for (std::size_t i = 1, j = 0; i < n; ++i) {
      std::size_t bit = n >> 1;
      for (; j & bit; bit >>= 1) j ^= bit;
      j ^= bit;
      if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
      const double ang = -2.0 * kPi / static_cast<double>(len);
      for (std::size_t i = 0; i < n; i += len) {
        for (std::size_t k = 0; k < len / 2; ++k) {
          const auto w = std::polar(1.0, ang * static_cast<double>(k));
          const auto u = a[i + k];
          const auto v = a[i + k + len / 2] * w;
          a[i + k] = u + v;
          a[i + k + len / 2] = u - v;
        }
      }
    }
    return a;
  }
  std::vector<std::complex<double>> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::complex<double> sum = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const auto phase = static_cast<double>((j * k) % n);
      sum += a[k] * std::polar(1.0, -2.0 * kPi * phase / static_cast<double>(n));
    }
    out[j] = sum;
  }
  return out;
}

}  // namespace

GaussianState::GaussianState(double x0, double p0, double sigma)
    : x0_(x0), p0_(p0), sigma_(sigma) {
  if (!(sigma > 0.0)) throw DomainError("GaussianState requires sigma > 0");
}

BoxState::BoxState(double half_width) : half_width_(half_width) {
  if (!(half_width > 0.0)) throw DomainError("BoxState requires a > 0");
}

SampledState::SampledState(double grid_start, double spacing,
                           std::vector<std::complex<double>> amplitudes)
    : grid_start_(grid_start),
      spacing_(spacing),
      amplitudes_(std::move(amplitudes)) {
  if (!(spacing > 0.0)) throw DomainError("SampledState requires spacing > 0");
  if (amplitudes_.size() < 2) {
    throw DomainError("SampledState requires at least 2 grid points");
  }
  double norm = 0.0;
  for (const auto& a : amplitudes_) norm += abs2(a);
  norm *= spacing_;
  if (std::abs(norm - 1.0) > 1e-10) {
    throw DomainError("SampledState amplitudes are not normalized");
  }
}

SampledState SampledState::normalized(
    double grid_start, double spacing,
    std::vector<std::complex<double>> amplitudes) {
  if (!(spacing > 0.0)) throw DomainError("SampledState requires spacing > 0");
  double norm = 0.0;
  for (const auto& a : amplitudes) norm += abs2(a);
  norm *= spacing;
  if (!(norm > 0.0)) {
    throw DomainError("cannot normalize identically zero amplitudes");
  }
  const double scale = 1.0 / std::sqrt(norm);
  for (auto& a : amplitudes) a *= scale;
  return SampledState(grid_start, spacing, std::move(amplitudes));
}

double position_density(const QuantumState& state, double x) {
  return std::visit(
      [&](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GaussianState>) {
          const double z = (x - s.x0()) / s.sigma();
          return std::exp(-z * z) / (s.sigma() * std::sqrt(kPi));
        } else if constexpr (std::is_same_v<T, BoxState>) {
          const double a = s.half_width();
          const double inside = 1.0 / (2.0 * a);
          if (std::abs(x) < a) return inside;
          // half-value convention on the edge; irrelevant to any integral
          if (std::abs(x) == a) return 0.5 * inside;
          return 0.0;
        } else {
          return sampled_density_at(s, x);
        }
      },
      state);
}

double momentum_density(const QuantumState& state, double p,
                        const PhysicalConstants& consts) {
  const double hbar = consts.hbar();
  return std::visit(
      [&](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GaussianState>) {
          const double z = s.sigma() * (p - s.p0()) / hbar;
          return s.sigma() * std::exp(-z * z) / (hbar * std::sqrt(kPi));
        } else if constexpr (std::is_same_v<T, BoxState>) {
          const double a = s.half_width();
          return a / (kPi * hbar) * sinc_sq(a * p / hbar);
        } else {
          return sampled_density_at(discrete_fourier_partner(s, hbar), p);
        }
      },
      state);
}

double interval_probability(const QuantumState& state, Space space, double lo,
                            double hi, const PhysicalConstants& consts) {
  if (!(lo < hi)) throw DomainError("interval_probability requires lo < hi");
  const double hbar = consts.hbar();
  const double value = std::visit(
      [&](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GaussianState>) {
          const double mean = space == Space::position ? s.x0() : s.p0();
          const double scale =
              space == Space::position ? s.sigma() : hbar / s.sigma();
          return erf_interval((lo - mean) / scale, (hi - mean) / scale);
        } else if constexpr (std::is_same_v<T, BoxState>) {
          const double a = s.half_width();
          if (space == Space::position) {
            const double overlap =
                std::min(hi, a) - std::max(lo, -a);
            return std::max(0.0, overlap) / (2.0 * a);
          }
          return box_momentum_cumulative(a, hbar, hi) -
                 box_momentum_cumulative(a, hbar, lo);
        } else {
          if (space == Space::position) return sampled_interval(s, lo, hi);
          return sampled_interval(discrete_fourier_partner(s, hbar), lo, hi);
        }
      },
      state);
  return std::max(0.0, value);
}

std::pair<double, double> support_bounds(const QuantumState& state, Space space,
                                         const PhysicalConstants& consts) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  const double hbar = consts.hbar();
  return std::visit(
      [&](const auto& s) -> std::pair<double, double> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GaussianState>) {
          const double mean = space == Space::position ? s.x0() : s.p0();
          const double scale =
              space == Space::position ? s.sigma() : hbar / s.sigma();
          return {mean - 40.0 * scale, mean + 40.0 * scale};
        } else if constexpr (std::is_same_v<T, BoxState>) {
          if (space == Space::position) {
            return {-s.half_width(), s.half_width()};
          }
          return {-kInf, kInf};
        } else {
          if (space == Space::position) {
            return {s.grid_start(), s.grid_point(s.size() - 1)};
          }
          const double dp =
              2.0 * kPi * hbar / (static_cast<double>(s.size()) * s.spacing());
          const double p_start = -static_cast<double>(s.size() / 2) * dp;
          return {p_start, p_start + dp * static_cast<double>(s.size() - 1)};
        }
      },
      state);
}

SampledState discrete_fourier_partner(const SampledState& state, double hbar) {
  if (!(hbar > 0.0)) throw DomainError("hbar must be positive");
  const std::size_t n = state.size();
  if (n < 8) throw GridTooSmall("discrete Fourier partner needs >= 8 points");

  const double dx = state.spacing();
  const double dp = 2.0 * kPi * hbar / (static_cast<double>(n) * dx);
  const double p_start = -static_cast<double>(n / 2) * dp;

  std::vector<std::complex<double>> pre(n);
  if (n % 2 == 0) {
    // exp(-i p_start n dx / hbar) reduces to (-1)^n on an even grid
    for (std::size_t k = 0; k < n; ++k) {
      pre[k] = (k % 2 == 0) ? state.amplitudes()[k] : -state.amplitudes()[k];
    }
  } else {
    for (std::size_t k = 0; k < n; ++k) {
      const double angle = -p_start * static_cast<double>(k) * dx / hbar;
      pre[k] = state.amplitudes()[k] * std::polar(1.0, angle);
    }
  }

  auto spectrum = dft(std::move(pre));

  const double scale = dx / std::sqrt(2.0 * kPi * hbar);
  const double x0 = state.grid_start();
  for (std::size_t j = 0; j < n; ++j) {
    const double pj = p_start + dp * static_cast<double>(j);
    spectrum[j] *= scale * std::polar(1.0, -pj * x0 / hbar);
  }
  return SampledState(p_start, dp, std::move(spectrum));
}

}  // namespace entropic
