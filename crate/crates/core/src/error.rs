use thiserror::Error;

/// Errors produced by parsers, solvers, and constructions.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed text input; `line` is 1-based and counts every input line.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Malformed graph6 input.
    #[error("graph6 parse error: {0}")]
    Graph6(String),

    /// The operation requires a connected graph.
    #[error("graph is not connected")]
    Disconnected,

    /// A vertex id outside `[0, n)`.
    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    /// Invalid parameter (family arguments, empty factors, bad ranges).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Instance too large for an exact routine; the limit can often be raised
    /// by the caller (e.g. solver cap override).
    #[error("graph order {n} exceeds the supported size {limit} for {what}")]
    UnsupportedSize {
        n: usize,
        limit: usize,
        what: &'static str,
    },

    /// A construction or theorem hypothesis does not hold for the input.
    #[error("precondition not met: {0}")]
    Precondition(String),

    /// A set claimed to be a generator fails verification.
    #[error("invalid basis: {0}")]
    InvalidBasis(String),

    /// An internally produced set failed its mandatory verification.
    #[error("verification failed: {0}")]
    VerificationFailed(String),

    /// A sweep row exceeded its time budget.
    #[error("time budget exceeded")]
    Timeout,
}

pub type Result<T> = std::result::Result<T, Error>;
