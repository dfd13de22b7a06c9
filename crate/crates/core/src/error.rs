use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("label {0} is outside -9..=9 or is zero (use the null class for 0)")]
    InvalidLabel(i64),
    #[error("cannot parse class label {0:?}")]
    UnparsableLabel(String),
    #[error("the null class has no {0}")]
    NullClass(&'static str),
    #[error("expected a positive integer, got {0}")]
    NotPositive(String),
    #[error("expected a negative integer, got {0}")]
    NotNegative(String),
    #[error("0 belongs to the null class and has no matrix coordinate")]
    ZeroHasNoCoordinate,
    #[error("row index must be at least 1, got {0}")]
    InvalidRow(String),
    #[error("integer overflow while {0}")]
    Overflow(&'static str),
    #[error("exponent {got} is below the minimum of {min}")]
    ExponentTooSmall { got: u64, min: u64 },
    #[error("unknown table id {0} (expected 4..=9)")]
    UnknownTable(u32),
    #[error("operation {0} is not supported here")]
    UnsupportedOp(&'static str),
    #[error("malformed witness query: {0}")]
    MalformedQuery(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("search needs {needed} candidates, above the ceiling of {ceiling}")]
    ResourceGuard { needed: u128, ceiling: u128 },
    #[error("filtered and unfiltered searches disagree on k = {k}")]
    Unsound { k: i64 },
}
