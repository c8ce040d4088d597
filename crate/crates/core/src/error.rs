use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("m=0 singular: profile is a circle")]
    SingularSlope,

    #[error("domain error in {context}: parameter {param} is outside the valid window")]
    Domain { context: &'static str, param: f64 },

    #[error("singular parameter {param} in {context}")]
    SingularParameter { context: &'static str, param: f64 },

    #[error("singular sample {index}: {reason}")]
    SingularSample { index: usize, reason: &'static str },

    #[error("degenerate family: {0}")]
    Degenerate(String),

    #[error("unsupported case: {0}")]
    Unsupported(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {message}")]
    Csv { path: PathBuf, message: String },

    #[error("config key `{key}`: {message}")]
    Config { key: String, message: String },

    #[error("config parse error at byte {offset} (line {line}, column {column}): {message}")]
    ConfigParse {
        offset: usize,
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// True for errors that stem from the geometry itself (singular slope,
    /// poles, degenerate members) rather than from I/O or malformed input.
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            Error::SingularSlope
                | Error::Domain { .. }
                | Error::SingularParameter { .. }
                | Error::SingularSample { .. }
                | Error::Degenerate(_)
                | Error::Unsupported(_)
        )
    }
}
