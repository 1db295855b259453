use thiserror::Error;

use crate::algorithms::Algorithm;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty subgraph has no density")]
    EmptySubgraph,

    #[error("vertex {vertex} is not in the graph (n = {n})")]
    UnknownVertex { vertex: usize, n: usize },

    #[error("vertex {0} appears more than once")]
    DuplicateVertex(usize),

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("vertex {0} is not a cut-vertex")]
    NotCutVertex(usize),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("k = {k} is out of range (valid range {min}..={max})")]
    KOutOfRange { k: usize, min: usize, max: usize },

    #[error("attachment size {j} out of range (1..={available})")]
    AttachmentOutOfRange { j: usize, available: usize },

    #[error("density maximization undefined at zero edges")]
    Edgeless,

    #[error("no edges")]
    NoEdges,

    #[error("hub algorithm inapplicable: no vertex outside the high-degree set")]
    HubInapplicable,

    #[error("{0} requires an unweighted graph")]
    WeightedUnsupported(Algorithm),

    #[error("instance too large for oracle (n = {n}, limit {limit})")]
    OracleTooLarge { n: usize, limit: usize },

    #[error("no connected {0}-subgraph exists")]
    NoConnectedSubgraph(usize),

    #[error("ratio undefined: connected optimum has zero density")]
    ZeroDenominator,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
