//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Graph construction rejected an edge (self-loop, out-of-range endpoint,
    /// or duplicate pair).
    #[error("invalid edge ({u}, {v}): {reason}")]
    Construction { u: usize, v: usize, reason: String },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge id {edge} out of range for a graph with {m} edges")]
    EdgeOutOfRange { edge: usize, m: usize },

    #[error("dimension mismatch: matrix is {matrix}x{matrix} but graph has {graph} vertices")]
    DimensionMismatch { matrix: usize, graph: usize },

    /// Operation only supports inputs up to a fixed size.
    #[error("graph too large: {got} vertices exceeds the {limit}-vertex limit")]
    TooLarge { got: usize, limit: usize },

    #[error("domain error: {0}")]
    Domain(String),

    /// Input does not satisfy the structural hypotheses of the operation
    /// (wrong strongly-regular parameters, not regular, ...).
    #[error("not applicable: {0}")]
    Applicability(String),

    /// A caller-side precondition was violated.
    #[error("precondition violated: {0}")]
    Contract(String),

    #[error("search budget of {budget} nodes exhausted")]
    BudgetExhausted { budget: u64 },

    /// A structural verification found the input inconsistent with the
    /// expected decomposition.
    #[error("structural check failed: {0}")]
    Structure(String),

    #[error("invalid JSON: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
