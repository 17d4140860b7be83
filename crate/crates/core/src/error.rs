use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: expected two whitespace-separated node labels, got {content:?}")]
    Parse { line: usize, content: String },

    #[error("line {line}: {what} not allowed by load options")]
    Rejected { line: usize, what: &'static str },

    #[error("node {node} is not in the graph (node_count = {node_count})")]
    InvalidNode { node: usize, node_count: usize },

    #[error("unknown node label {0:?}")]
    UnknownLabel(String),

    #[error("infection probability {0} outside its domain {1}")]
    BetaDomain(f64, &'static str),

    #[error("node {0} is already a seed")]
    AlreadySeed(usize),

    #[error("duplicate seed {0}")]
    DuplicateSeed(usize),

    #[error("seed set is empty")]
    EmptySeedSet,

    #[error("requested {m} seeds but the graph has only {n} nodes")]
    TooManySeeds { m: usize, n: usize },

    #[error("{0}")]
    InvalidArgument(String),

    #[error("graph is empty")]
    EmptyGraph,

    #[error("graph has no edges; the epidemic threshold is undefined")]
    NoEdges,

    #[error("exact enumeration supports at most {max} nodes, graph has {n}")]
    TooLarge { n: usize, max: usize },

    #[error("placement bound {0} is too small: a feasible triple touches it; retry with a larger bound")]
    BoundTooSmall(u32),

    #[error("ordering x1 <= x2 <= x3 violated by ({0}, {1}, {2})")]
    Unordered(u32, u32, u32),

    #[error("cannot normalize against a zero baseline AIF")]
    ZeroBaseline,

    #[error("configuration error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
