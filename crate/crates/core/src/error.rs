use std::io;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("line {line}: {source}")]
    Line {
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("unsupported graph order {n} (limit {limit})")]
    UnsupportedSize { n: usize, limit: usize },

    #[error("operation requires a nonempty graph")]
    EmptyGraph,

    #[error("operation requires a connected graph")]
    Disconnected,

    #[error("operation requires at least {need} vertices, graph has {n}")]
    TooSmall { need: usize, n: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop at vertex {0} is not allowed in a simple graph")]
    Loop(usize),

    #[error("invalid graph spec: {0}")]
    InvalidSpec(String),

    #[error("{what} = {value} is outside {range}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        range: &'static str,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}

impl Error {
    pub(crate) fn graph6(offset: usize, reason: impl Into<String>) -> Self {
        Error::Graph6 {
            offset,
            reason: reason.into(),
        }
    }

    pub(crate) fn at_line(self, line: usize) -> Self {
        Error::Line {
            line,
            source: Box::new(self),
        }
    }
}
