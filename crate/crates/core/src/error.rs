use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degenerate segment: both endpoints are {0}")]
    DegenerateSegment(String),

    #[error("duplicate points at indices {first} and {second}")]
    DuplicatePoints { first: usize, second: usize },

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("the visibility graph is a path; a non-path point visibility graph is required")]
    NotNonPath,

    #[error("size mismatch: embedding has {points} points but graph has {vertices} vertices")]
    SizeMismatch { points: usize, vertices: usize },

    #[error("star-line coverage violated: point {0} lies on no line through the center")]
    CoverageViolation(usize),

    #[error("dominating set of size {size} exceeds the bound {bound}")]
    BoundViolation { size: usize, bound: usize },

    #[error("no Hamiltonian cycle exists")]
    NoHamiltonianCycle,

    #[error("family does not satisfy case ({0})")]
    InvalidCase(String),

    #[error("invalid family: {0}")]
    InvalidFamily(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("bisection needs an even vertex count, got {0}")]
    OddVertexCount(usize),

    #[error("graph with {vertices} vertices exceeds the solver limit of {limit}")]
    TooLarge { vertices: usize, limit: usize },

    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },
}

impl Error {
    pub(crate) fn schema(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Schema {
            path: path.into(),
            message: message.into(),
        }
    }
}
