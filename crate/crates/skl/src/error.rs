use thiserror::Error;

/// Errors shared across the library.
///
/// Bounded-resource conditions (`BudgetExhausted`, `ChromaticBudget`,
/// `GroupOrderLimit`, `VertexCeiling`) are recoverable: callers downgrade them
/// to "skipped" verdicts. Everything else indicates bad input or a broken
/// internal invariant.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge endpoint {endpoint} out of range for a graph on {num_vertices} vertices")]
    EndpointOutOfRange {
        endpoint: usize,
        num_vertices: usize,
    },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("degree mismatch: expected {expected}, got {actual}")]
    DegreeMismatch { expected: usize, actual: usize },

    #[error("not a bijection: {0}")]
    NotABijection(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("group order would exceed the configured limit of {max_order}")]
    GroupOrderLimit { max_order: usize },

    #[error("search budget of {budget} nodes exhausted after {nodes} nodes")]
    BudgetExhausted { budget: u64, nodes: u64 },

    #[error(
        "chromatic search budget of {budget} nodes exhausted; chromatic number lies in [{lower}, {upper}]"
    )]
    ChromaticBudget {
        budget: u64,
        lower: usize,
        upper: usize,
    },

    #[error("vertex count {vertices} exceeds the configured ceiling of {ceiling}")]
    VertexCeiling { vertices: u64, ceiling: usize },

    #[error("image of star {star} under an automorphism is not a star: {detail}")]
    StarImageNotStar { star: usize, detail: String },

    #[error("fractional cover invalid: vertex {vertex} is covered by {count} stars, expected {expected}")]
    InvalidCover {
        vertex: usize,
        count: usize,
        expected: usize,
    },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("internal invariant violation: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors that mean "ran out of configured resources", as opposed
    /// to invalid input or an internal defect.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::BudgetExhausted { .. }
                | Error::ChromaticBudget { .. }
                | Error::GroupOrderLimit { .. }
                | Error::VertexCeiling { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
