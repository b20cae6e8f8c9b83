#pragma once

#include <stdexcept>
#include <string>

namespace bidisk {

struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Degenerate input: two points that were required to be distinct coincide.
struct CoincidentPoints : GeometryError {
    using GeometryError::GeometryError;
};

struct NotHyperbolic : GeometryError {
    using GeometryError::GeometryError;
};

struct NotHyperbolicPair : GeometryError {
    using GeometryError::GeometryError;
};

struct ZeroK : GeometryError {
    using GeometryError::GeometryError;
};

struct OutOfDomain : GeometryError {
    using GeometryError::GeometryError;
};

// Numerical failure of the circle-intersection radicand near tangency.
struct NegativeDiscriminant : GeometryError {
    using GeometryError::GeometryError;
};

struct MixedSides : GeometryError {
    using GeometryError::GeometryError;
};

struct DegenerateFactor : GeometryError {
    using GeometryError::GeometryError;
};

struct BadIndex : GeometryError {
    using GeometryError::GeometryError;
};

struct PreconditionFailed : GeometryError {
    using GeometryError::GeometryError;
};

struct SearchFailed : GeometryError {
    using GeometryError::GeometryError;
};

}  // namespace bidisk
