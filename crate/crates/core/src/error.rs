use thiserror::Error;

use crate::bigmath::DyadicInterval;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    /// A precision cap or exact-expansion budget was hit before the answer
    /// was certified. `last` carries the final interval when there is one.
    #[error("budget exceeded: {reason}")]
    Budget {
        reason: String,
        last: Option<Box<DyadicInterval>>,
    },
}

impl Error {
    pub(crate) fn budget(reason: impl Into<String>) -> Self {
        Error::Budget {
            reason: reason.into(),
            last: None,
        }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
