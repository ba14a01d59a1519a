use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum FrcError {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A quadratic with a vanishing leading coefficient, or similar
    /// degenerate input.
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// The target value does not lie between the function values at the
    /// bracket endpoints.
    #[error("bracket error: {0}")]
    Bracket(String),

    /// The cutoff equation has no solution; carries the offending
    /// right-hand side.
    #[error("no solution: right-hand side {rhs} is outside the range of D")]
    NoSolution { rhs: String },

    /// A record line failed to parse.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A concise-notation value failed to parse; carries the offending
    /// span.
    #[error("cannot parse {span:?}: {msg}")]
    ParseValue { span: String, msg: String },

    /// Two records in one dataset share a name.
    #[error("duplicate record name: {0}")]
    DuplicateName(String),

    /// A record name was not found in the dataset.
    #[error("unknown record: {0}")]
    UnknownRecord(String),
}

pub type Result<T> = std::result::Result<T, FrcError>;
