use thiserror::Error;

/// Where a null (zero-divisor) vector sits in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NullBoundary {
    /// The zero vector.
    Origin,
    /// `x = 0`, the isotropic line of the parabolic plane.
    ImaginaryAxis,
    /// The asymptote `y = x / sqrt(p)`.
    AsymptoteRising,
    /// The asymptote `y = -x / sqrt(p)`.
    AsymptoteFalling,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by a zero divisor of C_p ({0:?})")]
    NullDivisor(NullBoundary),
    #[error("vectors lie in different sectors of the plane")]
    SectorMismatch,
    #[error("p-tangent is undefined where the p-cosine vanishes")]
    PoleOfTangent,
    #[error("value {0} lies outside the range of the p-tangent")]
    OutOfRange(f64),
    #[error("angular velocity vanishes, the motion has no instantaneous pole")]
    NoPole,
    #[error("degenerate instant: {0}")]
    DegenerateMotion(&'static str),
    #[error("pole ray does not meet the inflection locus in the search bracket")]
    NoRoot,
    #[error("ray is tangent to the pole curves (sinp of the ray angle is zero)")]
    TangentRay,
    #[error("distance from the pole is zero")]
    ZeroDistance,
    #[error("curvature center coincides with the point's own distance, rho* is infinite")]
    CircularTrajectory,
    #[error("radius is infinite, no finite image exists")]
    InfiniteRadius,
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
