use core::fmt;

/// Errors raised by constructors, evaluators and solvers.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Some interface weight is not strictly positive.
    NonPositiveWeight { pair: (u8, u8), value: f64 },
    /// A triangle inequality between the weights fails or is an equality.
    TriangleViolation { pair: (u8, u8) },
    /// The operation needs `c12 == c13`.
    AsymmetricWeights { c12: f64, c13: f64 },
    /// Argument outside the mathematical domain of the operation.
    Domain(&'static str),
    /// The region does not contain the bounded chamber.
    RegionTooSmall { radius: f64, required: f64 },
    /// Region radius exceeds the truncation disk of a discrete cluster.
    RegionExceedsTruncation { radius: f64, truncation: f64 },
    /// The truncation disk does not strictly contain the bounded chamber.
    TruncationTooSmall { truncation: f64, extent: f64 },
    /// A nonlinear solve did not reach its tolerance.
    SolveFailed { residual: f64 },
    /// Contact parameter outside `(-1, 1)`.
    BetaOutOfRange(f64),
    /// A set evaluated relative to the upper halfspace reaches below it.
    SetLeavesHalfspace,
    /// Flux constant too large for the inner radius of an exterior graph.
    FluxTooLarge { flux: f64, limit: f64 },
    /// Column cluster is not a fixed point of symmetrization.
    NotSymmetric,
    /// Volume projection Newton iteration did not converge.
    ProjectionFailed { residual: f64 },
    /// Descent step size underflowed before convergence.
    Diverged { iterations: usize },
    /// A cluster has the wrong number of triple junctions.
    WrongJunctionCount(usize),
    /// Structurally unusable cluster or column data.
    InvalidInput(&'static str),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NonPositiveWeight { .. } => "NonPositiveWeight",
            Error::TriangleViolation { .. } => "TriangleViolation",
            Error::AsymmetricWeights { .. } => "AsymmetricWeights",
            Error::Domain(_) => "DomainError",
            Error::RegionTooSmall { .. } => "RegionTooSmall",
            Error::RegionExceedsTruncation { .. } => "RegionExceedsTruncation",
            Error::TruncationTooSmall { .. } => "TruncationTooSmall",
            Error::SolveFailed { .. } => "SolveFailed",
            Error::BetaOutOfRange(_) => "BetaOutOfRange",
            Error::SetLeavesHalfspace => "SetLeavesHalfspace",
            Error::FluxTooLarge { .. } => "FluxTooLarge",
            Error::NotSymmetric => "NotSymmetric",
            Error::ProjectionFailed { .. } => "ProjectionFailed",
            Error::Diverged { .. } => "Diverged",
            Error::WrongJunctionCount(_) => "WrongJunctionCount",
            Error::InvalidInput(_) => "InvalidInput",
        }
    }

    /// True for failures of an iterative numerical method (as opposed to
    /// rejected inputs).
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::SolveFailed { .. } | Error::Diverged { .. } | Error::ProjectionFailed { .. }
        )
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonPositiveWeight { pair, value } => {
                write!(f, "weight c{}{} = {} is not positive", pair.0, pair.1, value)
            }
            Error::TriangleViolation { pair } => write!(
                f,
                "weight c{}{} is not strictly less than the sum of the other two",
                pair.0, pair.1
            ),
            Error::AsymmetricWeights { c12, c13 } => {
                write!(f, "operation requires c12 == c13 (got {c12} and {c13})")
            }
            Error::Domain(what) => write!(f, "domain error: {what}"),
            Error::RegionTooSmall { radius, required } => write!(
                f,
                "region radius {radius} does not contain the bounded chamber (needs > {required})"
            ),
            Error::RegionExceedsTruncation { radius, truncation } => write!(
                f,
                "region radius {radius} exceeds truncation radius {truncation}"
            ),
            Error::TruncationTooSmall { truncation, extent } => write!(
                f,
                "truncation radius {truncation} does not exceed chamber extent {extent}"
            ),
            Error::SolveFailed { residual } => write!(f, "solve failed, residual {residual:e}"),
            Error::BetaOutOfRange(b) => write!(f, "beta = {b} is outside (-1, 1)"),
            Error::SetLeavesHalfspace => write!(f, "set is not contained in the upper halfspace"),
            Error::FluxTooLarge { flux, limit } => {
                write!(f, "|C| = {} must be below r0^(n-2) = {}", flux.abs(), limit)
            }
            Error::NotSymmetric => write!(f, "column cluster is not symmetric"),
            Error::ProjectionFailed { residual } => {
                write!(f, "volume projection failed, residual {residual:e}")
            }
            Error::Diverged { iterations } => {
                write!(f, "descent step underflowed after {iterations} iterations")
            }
            Error::WrongJunctionCount(n) => write!(f, "expected 2 triple junctions, found {n}"),
            Error::InvalidInput(what) => write!(f, "invalid input: {what}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
