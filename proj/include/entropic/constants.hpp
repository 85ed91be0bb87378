#pragma once

#include <numbers>

#include "entropic/errors.hpp"

namespace entropic {

/// Run-scoped unit system. Planck's constant h is always derived as 2*pi*hbar,
/// never stored on its own.
class PhysicalConstants {
 public:
  PhysicalConstants() = default;

  explicit PhysicalConstants(double hbar) : hbar_(hbar) {
    if (!(hbar > 0.0)) throw DomainError("hbar must be positive");
  }

  double hbar() const { return hbar_; }
  double h() const { return 2.0 * std::numbers::pi * hbar_; }

 private:
  double hbar_ = 1.0;
};

}  // namespace entropic
