#pragma once

#include <complex>
#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

#include "entropic/constants.hpp"

namespace entropic {

enum class Space { position, momentum };

/// Gaussian wave packet centered at (x0, p0) with width sigma. The position
/// density is normal with mean x0 and variance sigma^2/2; the momentum
/// density is normal with mean p0 and variance hbar^2/(2 sigma^2). Phase
/// factors of the underlying wave function never enter a density.
class GaussianState {
 public:
  GaussianState(double x0, double p0, double sigma);

  double x0() const { return x0_; }
  double p0() const { return p0_; }
  double sigma() const { return sigma_; }

 private:
  double x0_;
  double p0_;
  double sigma_;
};

/// Flat wave function on |x| <= a. Its momentum density is the squared sinc
/// (hbar/(a pi)) sin^2(a p / hbar) / p^2 with finite value a/(pi hbar) at
/// p = 0.
class BoxState {
 public:
  explicit BoxState(double half_width);

  double half_width() const { return half_width_; }

 private:
  double half_width_;
};

/// Complex amplitudes on a uniform grid, zero outside. Construction enforces
/// the discrete normalization spacing * sum |amplitude|^2 = 1 to 1e-10;
/// normalized() rescales arbitrary amplitudes first.
class SampledState {
 public:
  SampledState(double grid_start, double spacing,
               std::vector<std::complex<double>> amplitudes);

  static SampledState normalized(double grid_start, double spacing,
                                 std::vector<std::complex<double>> amplitudes);

  std::size_t size() const { return amplitudes_.size(); }
  double grid_start() const { return grid_start_; }
  double spacing() const { return spacing_; }
  double grid_point(std::size_t i) const {
    return grid_start_ + spacing_ * static_cast<double>(i);
  }
  const std::vector<std::complex<double>>& amplitudes() const {
    return amplitudes_;
  }

 private:
  double grid_start_;
  double spacing_;
  std::vector<std::complex<double>> amplitudes_;
};

using QuantumState = std::variant<GaussianState, BoxState, SampledState>;

/// |psi(x)|^2. SampledState interpolates |amplitude|^2 linearly between grid
/// points and is zero outside the grid.
double position_density(const QuantumState& state, double x);

/// |psi~(p)|^2 of the Fourier partner. SampledState transforms its grid first.
double momentum_density(const QuantumState& state, double p,
                        const PhysicalConstants& consts = {});

/// Probability mass of [lo, hi] in the chosen space; infinite endpoints are
/// allowed. Gaussian intervals use the closed-form erf expression, box
/// position is exact piecewise-linear mass, box momentum integrates the
/// squared sinc between its zeros k pi hbar / a (far tail summed by the
/// asymptotic sine-integral remainder), SampledState integrates its linear
/// interpolant.
double interval_probability(const QuantumState& state, Space space, double lo,
                            double hi, const PhysicalConstants& consts = {});

/// Unitary centered discrete Fourier transform with physical normalization:
/// momentum grid spacing 2 pi hbar / (N * spacing), Plancherel exact up to
/// rounding. Requires at least 8 grid points.
SampledState discrete_fourier_partner(const SampledState& state, double hbar);

/// Conservative interval outside which interval_probability is exactly zero
/// at double precision: the box/sampled support, or the Gaussian center
/// +- 40 standard-score units (erfc underflows long before that). Unbounded
/// on the box momentum side, whose tail decays only like 1/p^2.
std::pair<double, double> support_bounds(const QuantumState& state, Space space,
                                         const PhysicalConstants& consts = {});

}  // namespace entropic
