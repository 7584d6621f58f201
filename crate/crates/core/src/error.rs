use thiserror::Error;

use crate::module::ModVector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("truncation dimension must be at least 1")]
    ZeroDimension,

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("delta is incompatible with yx = 1 at basis index {index}: residual {residual}")]
    IncompatibleDelta { index: usize, residual: ModVector },

    #[error("invalid extension spec: {0}")]
    InvalidSpec(String),

    #[error("extension splits; a nonsplit extension is required")]
    NotNonsplit,

    #[error("ideal slice did not stabilize up to slack {max_slack}")]
    StabilizationFailure { max_slack: u32 },

    #[error("degree slices live in different windows ({0} vs {1})")]
    MismatchedWindows(u32, u32),

    #[error("element must be nonzero")]
    ZeroElement,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
