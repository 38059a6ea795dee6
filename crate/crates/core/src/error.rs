use thiserror::Error;

use crate::graph::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),

    #[error("invalid graph at {at}: {msg}")]
    InvalidGraph { at: String, msg: String },

    #[error("parse error at line {line}, column {column}: {msg}")]
    Parse {
        line: usize,
        column: usize,
        msg: String,
    },

    #[error("horizon violated: {what} (ball B({center}, {radius}) reaches horizon vertex {hit})")]
    Horizon {
        what: &'static str,
        center: VertexId,
        radius: u32,
        hit: VertexId,
    },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("empty source set")]
    EmptySource,

    #[error("vertices {0} and {1} are not connected")]
    Disconnected(VertexId, VertexId),

    #[error("insufficient data: {0}")]
    Insufficient(String),

    #[error("vertex cap exceeded: host has {have} vertices, cap is {cap}")]
    CapExceeded { have: usize, cap: usize },

    #[error("no separation possible: {0}")]
    NoSeparation(String),

    #[error("verification failed: {0}")]
    VerificationFailed(String),

    #[error("cannot render: {0}")]
    Layout(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors that signal a broken result rather than bad input.
    pub fn is_verification(&self) -> bool {
        matches!(self, Error::VerificationFailed(_))
    }
}
