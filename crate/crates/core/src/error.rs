use thiserror::Error;

/// Errors produced by graph construction, matching operations and solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(
        "invalid generalized Petersen parameters: n={n}, k={k} (need n >= 3 and 1 <= k <= n-1)"
    )]
    BadPetersenParams { n: usize, k: usize },

    #[error("self-loop on vertex {0} is not allowed")]
    SelfLoop(usize),

    #[error("vertex {vertex} out of range for graph with {vertices} vertices")]
    VertexOutOfRange { vertex: usize, vertices: usize },

    #[error("edge set is not a perfect matching: {0}")]
    NotAPerfectMatching(String),

    #[error("edge subset is not contained in the matching")]
    NotASubset,

    #[error("matching does not belong to this graph (vertices {expected_vertices}, edges {expected_edges} expected)")]
    GraphMismatch {
        expected_vertices: usize,
        expected_edges: usize,
    },

    #[error("operation requires a generalized Petersen graph P(n,2) with n >= {min_n}")]
    NotPetersen { min_n: usize },

    #[error("chain word of span {word_span} does not fit n={n}")]
    ChainLengthMismatch { word_span: usize, n: usize },

    #[error("chain word mixes the AB and CD alphabets")]
    MixedAlphabet,

    #[error("chain expression parse error at byte {pos}: {msg}")]
    ChainParse { pos: usize, msg: String },

    #[error("matching is spoke-free but n is not divisible by 4; no chain-word encoding exists")]
    UnencodableSpokeFree,

    #[error("matching is not structured as a valid P(n,2) matching ({0})")]
    CorruptMatching(String),

    #[error("expected chain pattern {pattern} at column {column}")]
    PatternNotFound { pattern: String, column: usize },

    #[error("enumeration budget exceeded: {enumerated} matchings seen, budget {budget}")]
    BudgetExceeded { enumerated: usize, budget: usize },

    #[error("brute-force oracle limit exceeded: matching has {size} edges, limit {limit}")]
    OracleSizeExceeded { size: usize, limit: usize },

    #[error("{0}")]
    InvalidArgument(String),
}
