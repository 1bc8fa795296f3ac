use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph must have at least one node")]
    EmptyGraph,
    #[error("edge {edge} = ({u}, {v}) references a node outside 0..{n}")]
    NodeOutOfRange {
        edge: usize,
        u: usize,
        v: usize,
        n: usize,
    },
    #[error("edge {edge} is a self-loop on node {node}")]
    SelfLoop { edge: usize, node: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("edge id {edge} out of range for a graph with {m} edges")]
    EdgeOutOfRange { edge: usize, m: usize },

    #[error("{what}: expected length {expected}, found {found}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("rank of edge {edge} must be a positive integer")]
    NonPositiveRank { edge: usize },
    #[error("profile must contain at least one agent")]
    EmptyProfile,
    #[error("weight of edge {edge} must be non-negative")]
    NegativeWeight { edge: usize },
    #[error("cost of edge {edge} must be strictly positive")]
    NonPositiveCost { edge: usize },
    #[error("set cost is zero")]
    ZeroSetCost,

    #[error(
        "no candidate has positive marginal gain in round {round} (coverage {covered}/{target})"
    )]
    NoProgress {
        round: usize,
        covered: usize,
        target: usize,
    },
    #[error("{what} limited to {limit}, got {found}")]
    SizeGuard {
        what: &'static str,
        limit: usize,
        found: usize,
    },

    #[error("tree is not a minimum spanning tree for the agent")]
    NotAnMst,
    #[error("edge {edge} already belongs to the tree")]
    EdgeInTree { edge: usize },

    #[error("set cover input has an empty universe or no sets")]
    EmptySetCover,
    #[error("set cover element {element} is outside the universe 0..{universe}")]
    ElementOutOfRange { element: usize, universe: usize },
    #[error("set cover is infeasible: element {element} is in no set")]
    InfeasibleSetCover { element: usize },
    #[error("reduction needs at least two sets, got {q}")]
    DegenerateReduction { q: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("malformed file: {0}")]
    Malformed(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Stable short code, used in CLI diagnostics.
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptyGraph => "empty-graph",
            Error::NodeOutOfRange { .. } => "node-out-of-range",
            Error::SelfLoop { .. } => "self-loop",
            Error::Disconnected => "disconnected",
            Error::EdgeOutOfRange { .. } => "edge-out-of-range",
            Error::LengthMismatch { .. } => "length-mismatch",
            Error::NonPositiveRank { .. } => "non-positive-rank",
            Error::EmptyProfile => "empty-profile",
            Error::NegativeWeight { .. } => "negative-weight",
            Error::NonPositiveCost { .. } => "non-positive-cost",
            Error::ZeroSetCost => "zero-set-cost",
            Error::NoProgress { .. } => "no-progress",
            Error::SizeGuard { .. } => "size-guard",
            Error::NotAnMst => "not-an-mst",
            Error::EdgeInTree { .. } => "edge-in-tree",
            Error::EmptySetCover => "empty-set-cover",
            Error::ElementOutOfRange { .. } => "element-out-of-range",
            Error::InfeasibleSetCover { .. } => "infeasible-set-cover",
            Error::DegenerateReduction { .. } => "degenerate-reduction",
            Error::InvalidParameters(_) => "invalid-parameters",
            Error::Malformed(_) => "malformed",
            Error::Json(_) => "json",
            Error::Io(_) => "io",
        }
    }
}
