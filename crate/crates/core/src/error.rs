use thiserror::Error;

/// Errors from terms, sorts, substitutions and finite algebras.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("unknown operation `{0}`")]
    UnknownOperation(String),
    #[error("duplicate operation `{0}`")]
    DuplicateOperation(String),
    #[error("operation `{op}` has arity {expected}, applied to {found} arguments")]
    ArityMismatch { op: String, expected: usize, found: usize },
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("sort mismatch: expected {expected}, found {found}")]
    SortMismatch { expected: String, found: String },
    #[error("algebra must have at least one element")]
    EmptyCarrier,
    #[error("table of `{op}` has {found} entries, expected {expected}")]
    TableSize { op: String, expected: usize, found: usize },
    #[error("table of `{op}` contains {value}, outside 0..{size}")]
    ValueOutOfRange { op: String, value: usize, size: usize },
    #[error("element {value} outside the carrier 0..{size}")]
    ElementOutOfRange { value: usize, size: usize },
}
