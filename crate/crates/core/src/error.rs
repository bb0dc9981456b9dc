use core::fmt;

/// Everything that can go wrong in a numerical evaluation or a count.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Error {
    /// An input had a NaN or infinite component.
    NonFinite,
    /// An argument violated a documented precondition.
    InvalidArgument(&'static str),
    /// ζ evaluated too close to its pole.
    PoleAtOne,
    /// Γ evaluated too close to one of 0, −1, −2, ….
    PoleAtNonPositiveInteger,
    /// A series ran out of terms before reaching the error goal.
    NonConvergence,
    /// A division by a value below the guard threshold.
    NearZeroDivision,
    /// Argument outside the domain of the evaluator.
    DomainError(&'static str),
    /// An exponential would leave the binary64 range.
    Overflow,
    /// The function vanished (numerically) on a traced path.
    ZeroOnPath { at: (f64, f64) },
    /// Adaptive refinement hit its depth limit without meeting its contract.
    MaxDepthExceeded,
    /// Accumulated argument was not an integer multiple of 2π.
    NonIntegerWinding { winding: f64 },
    /// Disk zero bound requested with a zero at the disk center.
    ZeroAtCenter,
    /// The zero scan saw two sign changes inside one minimal step.
    StepTooCoarse { t: f64 },
    /// A counting contour passes too close to a zero; retry at the suggested height.
    ContourThroughZero { suggested_height: f64 },
    /// The zero census does not reach the height a computation needs.
    CensusIncomplete,
    /// Critical-line census and argument-principle count disagree.
    CensusMismatch { census: usize, winding: i64 },
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonFinite => write!(f, "non-finite input"),
            Error::InvalidArgument(what) => write!(f, "invalid argument: {what}"),
            Error::PoleAtOne => write!(f, "zeta evaluated at or too close to the pole s = 1"),
            Error::PoleAtNonPositiveInteger => {
                write!(f, "gamma evaluated at or too close to a non-positive integer")
            }
            Error::NonConvergence => write!(f, "series did not converge within max_terms"),
            Error::NearZeroDivision => write!(f, "division by a value below the zero guard"),
            Error::DomainError(what) => write!(f, "domain error: {what}"),
            Error::Overflow => write!(f, "exponent outside the binary64 range"),
            Error::ZeroOnPath { at } => {
                write!(f, "function vanishes on the path near {} + {}i", at.0, at.1)
            }
            Error::MaxDepthExceeded => write!(f, "adaptive refinement exceeded its maximum depth"),
            Error::NonIntegerWinding { winding } => {
                write!(f, "winding number {winding} is not within 1e-3 of an integer")
            }
            Error::ZeroAtCenter => write!(f, "function vanishes at the disk center"),
            Error::StepTooCoarse { t } => {
                write!(f, "two sign changes inside one minimal scan step near t = {t}")
            }
            Error::ContourThroughZero { suggested_height } => write!(
                f,
                "contour passes through or near a zero; retry with height {suggested_height}"
            ),
            Error::CensusIncomplete => write!(f, "zero census does not reach the required height"),
            Error::CensusMismatch { census, winding } => write!(
                f,
                "critical-line census found {census} zeros but the contour count is {winding}"
            ),
        }
    }
}
