#pragma once

#include <stdexcept>

namespace simplexcover {

struct GeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input points or bodies are not full-dimensional where that is required.
struct DegenerateInput : GeometryError {
  using GeometryError::GeometryError;
};

struct UnboundedInput : GeometryError {
  using GeometryError::GeometryError;
};

struct DimensionMismatch : GeometryError {
  using GeometryError::GeometryError;
};

/// An operation that requires a certified covering was handed one that is not.
struct NotACovering : GeometryError {
  using GeometryError::GeometryError;
};

/// A sampled point was covered by no translate although a covering certificate
/// was held; the certificate and the sampler disagree.
struct ZeroMultiplicity : GeometryError {
  using GeometryError::GeometryError;
};

/// The covering verifier went inconclusive before the requested precision.
struct DepthExhausted : GeometryError {
  using GeometryError::GeometryError;
};

struct NoCoveringFound : GeometryError {
  using GeometryError::GeometryError;
};

}  // namespace simplexcover
