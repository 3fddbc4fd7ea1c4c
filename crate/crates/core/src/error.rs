use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("hypergraph needs at least one vertex")]
    NoVertices,
    #[error("edge #{0} is empty; an empty edge admits no vertex cover")]
    EmptyEdge(usize),
    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("weight #{0} is not positive")]
    NonPositiveWeight(usize),
    #[error("expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("maximal minors need rows <= cols, got {rows}x{cols}")]
    TooManyRows { rows: usize, cols: usize },
    #[error("desk-scale cap exceeded: size {size} > cap {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("matrix has a negative entry at ({row}, {col})")]
    NegativeEntry { row: usize, col: usize },
    #[error("vector is not a {k}-cover")]
    NotACover { k: u64 },
    #[error("point is integral; a fractional vertex is required")]
    IntegralPoint,
    #[error("point is not a vertex of the cover polyhedron")]
    NotAVertex,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
