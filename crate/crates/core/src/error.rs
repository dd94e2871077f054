use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain on which the quantity is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// A partition string could not be parsed.
    #[error("malformed partition {input:?}: bad token {token:?} ({reason})")]
    Parse {
        input: String,
        token: String,
        reason: &'static str,
    },

    /// Two towers cannot be merged because they share a nonempty row.
    #[error("towers overlap in row {row}")]
    TowerOverlap { row: usize },

    /// A tower label is not a 2-core.
    #[error("label {label} at row {row} is not a 2-core")]
    NotACore { row: usize, label: String },

    /// Malformed tower or report JSON.
    #[error("invalid JSON document: {0}")]
    Json(String),

    /// Unknown group name.
    #[error("unknown group {0:?}")]
    UnknownGroup(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
