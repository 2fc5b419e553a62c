use thiserror::Error;

/// Errors raised across the toolkit.
///
/// The variants fall into three groups that the command-line front-end maps
/// onto exit codes: malformed input (2), a well-formed graph outside an
/// operation's domain (3), and internal invariant violations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("vertex {0} is isolated; total variants need every vertex to have a neighbor")]
    IsolatedVertex(usize),

    #[error("graph contains a claw centered at {center} with leaves {leaves:?}")]
    NotClawFree { center: usize, leaves: [usize; 3] },

    #[error("graph is not connected")]
    Disconnected,

    #[error("{0} is an exceptional graph (member of E)")]
    Exceptional(String),

    #[error("order {order} exceeds the supported maximum of {max}")]
    TooLarge { order: usize, max: usize },

    #[error("{0}")]
    Domain(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// True for errors describing a valid graph that an operation refuses.
    pub fn is_domain(&self) -> bool {
        matches!(self, Error::IsolatedVertex(_) | Error::Exceptional(_) | Error::Domain(_) | Error::TooLarge { .. })
    }

    pub(crate) fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
