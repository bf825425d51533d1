use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Parse { offset: usize, reason: String },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("graph is disconnected: {0}")]
    Disconnected(String),

    /// The exact solver ran out of budget. The true value lies in `lo..=hi`.
    #[error(
        "search budget exhausted after {examined} sets; zero forcing number lies in [{lo}, {hi}]"
    )]
    BudgetExhausted { lo: usize, hi: usize, examined: u64 },

    #[error("{what} is limited to n <= {limit} (requested n = {requested})")]
    Resource {
        what: &'static str,
        limit: usize,
        requested: usize,
    },

    #[error("forcing closure is incomplete: {0}")]
    IncompleteClosure(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn argument(msg: impl Into<String>) -> Error {
    Error::Argument(msg.into())
}
