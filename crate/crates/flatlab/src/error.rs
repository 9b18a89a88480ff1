//! Crate-wide error type.

/// Errors produced by any of the analysis modules.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("polynomial {poly:#x} is reducible over GF(2)")]
    ReduciblePolynomial { poly: u64 },
    #[error("defining polynomial has degree {got}, expected {expected}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("exponent {0} out of range")]
    ExponentOutOfRange(u64),
    #[error("truth table has {got} entries, expected {expected}")]
    BadLength { expected: usize, got: usize },
    #[error("table entry {value} at index {index} exceeds output range (< {bound})")]
    EntryOutOfRange {
        index: usize,
        value: u32,
        bound: u32,
    },
    #[error("component mask must be nonzero")]
    ZeroMask,
    #[error("invalid coordinate split")]
    BadSplit,
    #[error("matrix is singular over GF(2)")]
    SingularMatrix,
    #[error("function is not APN")]
    NotApn,
    #[error("function is not bent")]
    NotBent,
    #[error("moment formula produced a non-integer value")]
    NonIntegerResult,
    #[error("input dimension too large for this operation")]
    DimensionTooLarge,
    #[error("instance too large for exhaustive processing")]
    TooLarge,
    #[error("invalid parameters")]
    BadParameters,
    #[error("block sets overlap")]
    OverlappingBlocks,
    #[error("incidence structures have different point counts or block sizes")]
    MismatchedPoints,
    #[error("extension chain contains a non-bent function")]
    NotBentInChain,
    #[error("claimed partition does not hold")]
    PartitionFails,
    #[error("function has empty support")]
    EmptySupport,
    #[error("structures have incompatible shape")]
    ShapeMismatch,
    #[error("word lengths differ")]
    LengthMismatch,
    #[error("word length exceeds the exhaustive-sweep cap")]
    LengthOverCap,
    #[error("operation requires an even input dimension")]
    OddDimension,
    #[error("operation is not supported at this dimension")]
    UnsupportedDimension,
    #[error("function is not extendable")]
    NotExtendable,
    #[error("the zero word must belong to the base set")]
    ZeroNotInA,
    #[error("U is not a subset of the metric complement")]
    UNotInComplement,
    #[error("dual support designs are only available at weights 4 and 6")]
    UnsupportedDualWeight,
    #[error("premise requires dual codewords of weight {0}, beyond the enumeration cap")]
    DualWeightUnverifiable(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
