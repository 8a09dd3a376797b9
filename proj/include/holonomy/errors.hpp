#pragma once

#include <stdexcept>

namespace holonomy {

// Base type for contract violations the library can diagnose. Subclasses name
// the failed precondition; the message carries the offending values.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// algebra
struct NonHermitianInput final : Error { using Error::Error; };
struct NonUnitaryInput final : Error { using Error::Error; };

// bloch
struct ZeroVector final : Error { using Error::Error; };
struct NotAProjector final : Error { using Error::Error; };

// lift
struct StartMismatch final : Error { using Error::Error; };
// Adjacent directors nearly orthogonal: the sheet choice is unreliable and
// the caller must refine the sampling.
struct StepTooLarge final : Error { using Error::Error; };
struct NotClosed final : Error { using Error::Error; };
struct EndpointUnresolved final : Error { using Error::Error; };
struct EndpointMismatch final : Error { using Error::Error; };

// models
struct DegeneracyOnPath final : Error { using Error::Error; };

// dynamics
struct StepTooCoarse final : Error { using Error::Error; };
struct NonPositiveInput final : Error { using Error::Error; };
struct GridMismatch final : Error { using Error::Error; };

// cli
struct ConfigError final : Error { using Error::Error; };

}  // namespace holonomy
