use thiserror::Error;

/// Errors produced by graph construction, factor computations and solvers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1} is not present")]
    MissingEdge(usize, usize),
    #[error("expected a {expected}-pole, got arity {actual}")]
    UnsupportedArity { expected: usize, actual: usize },
    #[error("invalid pole: {0}")]
    InvalidPole(String),
    #[error("construction would create a multigraph: {0}")]
    Multigraph(String),
    #[error("invalid even factor: {0}")]
    InvalidFactor(String),
    #[error("graph is disconnected, no tour exists")]
    Disconnected,
    #[error("graph has a vertex of degree {degree} > 3 at {vertex}")]
    NotSubcubic { vertex: usize, degree: usize },
    #[error("resource bound exceeded: {0}")]
    ResourceBound(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("lemma premise not satisfied: {0}")]
    Premise(String),
    #[error("no even factor satisfies the restriction")]
    Infeasible,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn is_resource_bound(&self) -> bool {
        matches!(self, Error::ResourceBound(_))
    }
}
