#pragma once

#include <stdexcept>
#include <string>

namespace cycloptics {

/// Base class of every exception thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid argument or parameter outside its admissible range.
struct DomainError : Error {
    using Error::Error;
};

/// A curve derivative vanishes where a regular curve is required.
struct RegularityError : Error {
    using Error::Error;
};

/// Curvature is zero where a center of curvature is required.
struct CurvatureSingularError : Error {
    using Error::Error;
};

/// A slide rises to or above its start height past the start point.
struct NotDescendingError : Error {
    using Error::Error;
};

/// Slide endpoints do not match the required chord.
struct EndpointError : Error {
    using Error::Error;
};

/// No admissible perturbation found within the resample budget.
struct PerturbationError : Error {
    using Error::Error;
};

/// The ray would turn horizontal before reaching the requested depth.
/// `critical_depth` is where the layer speed reaches the Snell constant,
/// y* = c^2 / (2g).
struct TurningPointError : Error {
    TurningPointError(const std::string& what, double critical_depth_m)
        : Error(what), critical_depth(critical_depth_m) {}
    double critical_depth;
};

/// Shooting supports descending (monotone) targets only.
struct UnsupportedTargetError : Error {
    using Error::Error;
};

/// The shooting bracket could not be established or did not converge.
struct ShootingError : Error {
    using Error::Error;
};

/// Snell's law has no real refraction angle for these inputs.
struct TotalInternalReflectionError : Error {
    using Error::Error;
};

/// Propagation time reaches the local curvature radius; the tangency
/// claim is not certified at or beyond the caustic.
struct CausticError : Error {
    using Error::Error;
};

}  // namespace cycloptics
