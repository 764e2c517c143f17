use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph is disconnected")]
    Disconnected,

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    #[error("invalid pair set: {0}")]
    InvalidPairs(String),

    #[error("vertex set is not a vertex cover: edge {0}-{1} is uncovered")]
    NotACover(usize, usize),

    #[error("{repeated} colors repeat but the subset mask holds at most {capacity}")]
    Capacity { repeated: usize, capacity: usize },

    #[error("search budget of {budget} nodes exceeded")]
    BudgetExceeded { budget: u64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("reduction equivalence violated: {0}")]
    Equivalence(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit status for this error: 3 when the search budget ran out,
    /// 4 for a broken internal invariant, 2 for bad input or arguments.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::BudgetExceeded { .. } => 3,
            Error::Invariant(_) | Error::Equivalence(_) => 4,
            _ => 2,
        }
    }
}
