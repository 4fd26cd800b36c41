//! Error type shared by all modules of the crate.

use std::fmt;

/// Errors raised by construction and precondition checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Rank parameter must satisfy `n >= 1`.
    InvalidRank { n: usize },
    /// Composite root length must lie in `1..=n`.
    InvalidCompositeLength { len: usize, n: usize },
    /// Two series with different cutoffs (or ranks) were combined.
    CutoffMismatch { left: u32, right: u32 },
    /// A coefficient beyond the truncation bound was requested; its value is
    /// unknown, not zero.
    CoefficientOutOfRange { height: u32, cutoff: u32 },
    /// Geometric factors require an exponent vector of positive height.
    ZeroHeightFactor,
    /// The wall violates the properness condition.
    ImproperWall,
    /// The wall is proper but contains a removable delta in some column.
    UnreducedWall { column: usize },
    /// The wall has a nonempty row in a position divisible by n+1.
    NotInY0 { row: usize },
    /// A listed color does not match the board color at its position.
    ColorMismatch {
        row: usize,
        column: usize,
        expected: usize,
        found: usize,
    },
    /// A Kostant part is out of range for the given rank.
    InvalidPart { reason: String },
    /// The expression contains a removable delta, so it is not reduced.
    UnreducedExpression { m: u32 },
    /// The odd factor of a delta-generator length must not be divisible by n+1.
    InvalidDeltaFactor { q: u32, n: usize },
    /// A multipartition component is not weakly decreasing or has a zero part.
    InvalidPartition { component: usize },
    /// A vector has the wrong number of entries for the given rank.
    RankMismatch { expected: usize, found: usize },
    /// Malformed JSON input for one of the wire formats.
    InvalidJson { message: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidRank { n } => write!(f, "rank parameter n must be >= 1, got {n}"),
            Error::InvalidCompositeLength { len, n } => {
                write!(f, "composite root length {len} outside 1..={n}")
            }
            Error::CutoffMismatch { left, right } => {
                write!(f, "series cutoff mismatch: {left} vs {right}")
            }
            Error::CoefficientOutOfRange { height, cutoff } => write!(
                f,
                "coefficient at height {height} exceeds cutoff {cutoff}: value unknown"
            ),
            Error::ZeroHeightFactor => {
                write!(f, "geometric factor requires an exponent of height >= 1")
            }
            Error::ImproperWall => write!(f, "wall is not proper"),
            Error::UnreducedWall { column } => {
                write!(f, "wall has a removable delta in column {column}")
            }
            Error::NotInY0 { row } => {
                write!(f, "row {row} is nonempty in a position divisible by n+1")
            }
            Error::ColorMismatch {
                row,
                column,
                expected,
                found,
            } => write!(
                f,
                "row {row} column {column} must have color {expected}, got {found}"
            ),
            Error::InvalidPart { reason } => write!(f, "invalid Kostant part: {reason}"),
            Error::UnreducedExpression { m } => {
                write!(f, "expression has a removable delta at m = {m}")
            }
            Error::InvalidDeltaFactor { q, n } => {
                write!(f, "factor q = {q} is divisible by n+1 = {}", n + 1)
            }
            Error::InvalidPartition { component } => {
                write!(f, "component {component} is not a partition")
            }
            Error::RankMismatch { expected, found } => {
                write!(f, "expected {expected} coefficients, got {found}")
            }
            Error::InvalidJson { message } => write!(f, "invalid JSON: {message}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
