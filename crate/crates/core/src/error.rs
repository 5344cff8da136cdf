use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong across the library. Most variants carry
/// enough context to be actionable from the CLI without a backtrace.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("size guard: {what} needs {needed}, cap is {cap}")]
    CapExceeded {
        what: String,
        needed: u128,
        cap: u128,
    },

    #[error("base size mismatch: left map acts on [{left}], right map on [{right}]")]
    BaseMismatch { left: usize, right: usize },

    #[error("substitution does not bind variable `{0}`")]
    UnboundVariable(String),

    #[error("monoid is not R-trivial")]
    NotRTrivial,

    #[error("relation `{lhs} = {rhs}` fails under the generator map")]
    RelationBroken { lhs: String, rhs: String },

    #[error("rewriting system is not complete: {0}")]
    Incomplete(String),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn cap(what: impl Into<String>, needed: u128, cap: u128) -> Self {
        Error::CapExceeded {
            what: what.into(),
            needed,
            cap,
        }
    }

    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
