use std::path::PathBuf;

/// Errors raised by the optimizer library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// The caller violated a precondition (wrong lengths, unknown names, bad parameters).
    #[error("usage error: {0}")]
    Usage(String),
    /// A requested structure would exceed a configured size limit.
    #[error("capacity error: {0}")]
    Capacity(String),
    /// Required external data (e.g. a reference front file) is missing or malformed.
    #[error("configuration error: {0}")]
    Config(String),
    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}
