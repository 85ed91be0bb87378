#pragma once

#include <stdexcept>

namespace entropic {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Argument outside the range an operation is defined for.
struct DomainError : Error {
  using Error::Error;
};

/// Adaptive integration could not reach the requested tolerance.
struct NonconvergedQuadrature : Error {
  using Error::Error;
};

/// Sampled grid too short for a discrete Fourier transform.
struct GridTooSmall : Error {
  using Error::Error;
};

/// A scenario's internal consistency check failed.
struct InvalidScenario : Error {
  using Error::Error;
};

}  // namespace entropic
