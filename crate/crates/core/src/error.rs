use thiserror::Error;

use crate::enumerators::EnumeratorKind;

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("enumerator kind mismatch: expected {expected}, found {found}")]
    Kind {
        expected: &'static str,
        found: EnumeratorKind,
    },

    #[error("invalid code parameters: {0}")]
    Parameter(String),

    #[error("resource guard exceeded: {0}")]
    Resource(String),

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
