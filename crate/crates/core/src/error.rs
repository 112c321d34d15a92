use thiserror::Error;

/// Errors raised by the algebra, representation and series routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid signature ({p},{q}): {reason}")]
    InvalidSignature {
        p: usize,
        q: usize,
        reason: &'static str,
    },

    #[error("Cl({p},{q}) is semisimple (p - q = 1 mod 4); semisimple algebras are not supported")]
    Semisimple { p: usize, q: usize },

    #[error("context mismatch: {left} vs {right}")]
    ContextMismatch { left: String, right: String },

    #[error("blade {blade} does not fit in {algebra}")]
    BladeOutOfRange { blade: String, algebra: String },

    #[error("element is not idempotent")]
    NotIdempotent,

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("division ring mismatch: {0}")]
    RingMismatch(String),

    #[error("inconsistent linear system: {0}")]
    Inconsistent(String),

    #[error("division by the zero polynomial")]
    ZeroDivisor,

    #[error("series did not converge within {max_n} terms (last step {last_step})")]
    NotConverged { max_n: usize, last_step: String },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }

    /// True for malformed textual input, as opposed to a domain failure.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
