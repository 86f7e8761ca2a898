#pragma once

#include <stdexcept>
#include <string>

namespace viscorod {

/// Base class of all solver errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Evaluation requested at a point where the quantity is undefined
/// (on the branch cut, at the origin with density terms, negative time, ...).
struct DomainError : Error {
    using Error::Error;
};

/// The strain symbol vanishes where a ratio with it is needed.
struct SingularModel : Error {
    using Error::Error;
};

/// Transfer-function evaluation landed at (or numerically on top of) a pole.
struct PoleHit : Error {
    using Error::Error;
};

/// The modulus does not exhibit the required finite positive limits at 0/infinity.
struct AsymptoticsViolation : Error {
    using Error::Error;
};

/// Winding accumulation could not keep per-step phase changes small enough.
struct ContourTooCoarse : Error {
    using Error::Error;
};

/// |f| fell below the safety floor along a certification contour.
struct ZeroOnContour : Error {
    using Error::Error;
};

/// Newton iteration did not converge within the iteration budget.
struct NoConvergence : Error {
    using Error::Error;
};

/// Winding counts disagree with the expected (2, 0) pole pattern.
struct CertificationFailed : Error {
    using Error::Error;
};

/// The branch-cut integral did not meet its truncation criterion in budget.
struct QuadratureFailure : Error {
    using Error::Error;
};

/// Time grid too coarse for the oscillation frequencies involved.
struct GridTooCoarse : Error {
    using Error::Error;
};

/// Closed-form elastic response requested at the resonant frequency.
struct ResonanceCase : Error {
    using Error::Error;
};

/// Numerical inversion method broke down (overflow, bad contour, ...).
struct MethodBreakdown : Error {
    using Error::Error;
};

/// Run-configuration text failed to parse or validate.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace viscorod
