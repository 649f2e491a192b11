use thiserror::Error;

/// Errors raised by constructors and analyses.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count {n} is outside 1..={cap}")]
    VariableCount { n: usize, cap: usize },

    #[error("expected {expected} truth-table bits, got {actual}")]
    TableLength { expected: usize, actual: usize },

    #[error("invalid character {found:?} at position {position} in truth table")]
    TableCharacter { found: char, position: usize },

    #[error("invalid hex truth table: {0}")]
    Hex(String),

    #[error("ANF parse error at byte {position}: {message}")]
    Anf { position: usize, message: String },

    #[error("variable index {index} out of range 1..={n}")]
    VariableIndex { index: usize, n: usize },

    #[error("subset mask {mask:#x} does not fit in {n} variables")]
    SubsetMask { mask: u64, n: usize },

    #[error("operation requires a nonempty variable set")]
    EmptySubset,

    #[error("subset is over {actual} variables, function has {expected}")]
    SubsetArity { expected: usize, actual: usize },

    #[error("assignment has {actual} bits, fixed set has {expected} variables")]
    AssignmentLength { expected: usize, actual: usize },

    #[error("{name} = {value} is outside {min}..={max}")]
    OutOfRange {
        name: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },

    #[error("input length {0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
