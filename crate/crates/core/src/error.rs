use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {what} = {value}")]
    Domain { what: String, value: f64 },

    #[error("division by zero in {0}")]
    DivisionByZero(&'static str),

    #[error("evaluation error: {0}")]
    Evaluation(String),

    #[error("no usable samples: {0}")]
    NoUsableSamples(String),

    #[error("only {usable} of {total} samples were usable (need at least half)")]
    InsufficientSamples { usable: usize, total: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("inapplicable spec: {0}")]
    InapplicableSpec(String),

    #[error("hypothesis mismatch: {0}")]
    HypothesisMismatch(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn domain(what: impl Into<String>, value: f64) -> Self {
        Error::Domain {
            what: what.into(),
            value,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
