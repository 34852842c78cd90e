use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: u64, message: String },

    #[error("empty graph")]
    EmptyGraph,

    #[error("item `{0}` has no contributors")]
    IsolatedItem(String),

    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),

    #[error("duplicate edge `{0}`-`{1}` (input must be a simple graph)")]
    DuplicateEdge(String, String),

    #[error("node id {id} out of range (side has {len} nodes)")]
    IdOutOfRange { id: u64, len: usize },

    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),

    #[error("unknown contributor id {0}")]
    UnknownContributor(u32),

    #[error("unknown contributor label `{0}`")]
    UnknownLabel(String),

    #[error("contributor `{0}` missing from ranking")]
    MissingContributor(String),

    #[error("not a permutation of contributors: {0}")]
    NotPermutation(String),

    #[error("{what} ({actual}) exceeds limit {limit}; {hint}")]
    ResourceGuard {
        what: &'static str,
        actual: u128,
        limit: u128,
        hint: &'static str,
    },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("infeasible configuration: {0}")]
    Infeasible(String),

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn parse(line: u64, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    /// True for refusals caused by a size or combinatorial guard.
    pub fn is_resource_guard(&self) -> bool {
        matches!(self, Error::ResourceGuard { .. })
    }
}
