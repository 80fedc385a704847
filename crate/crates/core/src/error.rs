use thiserror::Error;

/// Errors raised by the combinatorial constructions and checks.
///
/// A few variants (`AmbiguousBacktrack`, `AmbiguousSelection`,
/// `InternalInvariantViolation`, `NotDivisible`) can only be produced by a
/// defect: the underlying algorithms are well defined on every valid input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unexpected character {found:?} at position {position}")]
    BadCharacter { position: usize, found: char },
    #[error("unbalanced steps: {north} North vs {east} East")]
    UnbalancedSteps { north: usize, east: usize },
    #[error("path passes below the diagonal after step {position}")]
    BelowDiagonal { position: usize },
    #[error("invalid area sequence at index {index}")]
    InvalidAreaSequence { index: usize },
    #[error("operation needs a nonempty path")]
    EmptyPath,
    #[error("depth reading found several visited cells with maximal label {label}")]
    AmbiguousBacktrack { label: u32 },
    #[error("reading word found several frontier vertices with maximal label {label}")]
    AmbiguousSelection { label: i32 },
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
    #[error("path is not in the image of the Speyer map")]
    NotInImage,
    #[error("polynomial is not divisible by (1 - {variable})")]
    NotDivisible { variable: char },
    #[error("size {requested} exceeds the configured cap {cap} for {what}")]
    UnsupportedSize {
        what: &'static str,
        requested: usize,
        cap: usize,
    },
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
    #[error("unknown polynomial family {0:?}")]
    UnknownFamily(String),
    #[error("graph is not connected")]
    NotConnected,
    #[error("malformed {what}: {reason}")]
    Malformed { what: &'static str, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
