use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("edge index {0} out of range")]
    InvalidEdge(usize),

    #[error("vertex {0} out of range")]
    InvalidVertex(usize),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph is not 2-connected")]
    NotTwoConnected,

    #[error("guard exceeded: {what} is {value}, limit {limit}{hint}")]
    Guard {
        what: &'static str,
        value: usize,
        limit: usize,
        hint: &'static str,
    },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid labeling: {0}")]
    Labeling(String),

    #[error("postcondition violated: {0}")]
    Postcondition(String),

    #[error("certificate rejected: {0}")]
    Certificate(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn guard(what: &'static str, value: usize, limit: usize) -> Self {
        Error::Guard {
            what,
            value,
            limit,
            hint: "",
        }
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn is_guard(&self) -> bool {
        matches!(self, Error::Guard { .. })
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Certificate(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
