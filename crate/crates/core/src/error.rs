use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring specification: {0}")]
    InvalidSpec(String),

    #[error("ring axiom `{axiom}` fails at ({a}, {b}, {c})")]
    AxiomViolation {
        axiom: &'static str,
        a: usize,
        b: usize,
        c: usize,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("operands belong to different rings")]
    RingMismatch,

    #[error("internal consistency check failed: {0}")]
    InternalConsistency(String),

    #[error("{what} exceeds the search cap {cap} (size {size}){hint}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
        hint: &'static str,
    },

    /// The search ran out of budget; `best_lower_bound` is a valid lower bound
    /// for the constant but is not exact.
    #[error(
        "search budget exhausted after {nodes} nodes; best lower bound so far is {best_lower_bound} (not exact)"
    )]
    BudgetExhausted { best_lower_bound: usize, nodes: u64 },

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            column: offset + 1,
            message: message.into(),
        }
    }
}
