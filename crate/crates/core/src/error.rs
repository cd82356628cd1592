use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph6 parse error: {0}")]
    Graph6(String),

    #[error("coloring format error at line {line}: {msg}")]
    ColoringFormat { line: usize, msg: String },

    #[error("coloring has {coloring} colours but the freeness spec lists {spec}")]
    ArityMismatch { coloring: usize, spec: usize },

    #[error("coloring does not cover edge {0}-{1}")]
    UncoloredEdge(usize, usize),

    #[error("vertex set is not independent: {0}-{1} is an edge")]
    NotIndependent(usize, usize),

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("search cap exceeded: {0}")]
    CapExceeded(String),

    #[error("coloring is not free: monochromatic K{size} in colour {color}")]
    NotFree { color: usize, size: usize },

    #[error("unknown identifier: {0}")]
    Unknown(String),

    #[error("construction failed: {0}")]
    Construction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
