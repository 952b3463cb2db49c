use thiserror::Error;

/// Errors produced by solvers and analysis routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("EmptySet: a subtraction set needs at least one move")]
    EmptySet,
    #[error("NonPositiveEntry: move amounts must be positive integers, got {0}")]
    NonPositiveEntry(i64),
    #[error("TableTooLarge: {requested} entries exceeds the table cap of {cap}")]
    TableTooLarge { requested: u128, cap: u128 },
    #[error("EmptySum: a game sum needs at least one component")]
    EmptySum,
    #[error("Overflow: 5*k^2 does not fit in 64 bits for k = {k}")]
    Overflow { k: u64 },
    #[error("BoundExceeded: oracle position ({a}, {b}) exceeds the practical bound {bound}")]
    BoundExceeded { a: u64, b: u64, bound: u64 },
    #[error("IndexOutOfRange: position {index} outside table range 0..={max}")]
    IndexOutOfRange { index: u64, max: u64 },
    #[error("TableTooShort: table of {len} values cannot support period verification")]
    TableTooShort { len: usize },
    #[error("AgreementFailure: PTFN and Sprague-Grundy labels differ first at index {index}")]
    AgreementFailure { index: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
