use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("not finite-dimensional within path length {0}")]
    NotFiniteDimensional(usize),
    #[error("inhomogeneous relation: {0}")]
    InhomogeneousRelation(String),
    #[error("invalid algebra structure: {0}")]
    InvalidAlgebra(String),
    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),
    #[error("no associative nondegenerate form")]
    NotFrobenius,
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("projective resolution did not terminate within {0} steps")]
    ResolutionBoundExceeded(usize),
    #[error("split failure: End/rad has dimension {end_top_dim}, offending factor degree {factor_degree}")]
    SplitFailure { end_top_dim: usize, factor_degree: usize },
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("tilting criteria disagree: {0}")]
    TiltingCriteriaDisagree(String),
    #[error("enumeration bound exceeded after {nodes} nodes")]
    BoundExceeded { nodes: usize },
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("{0}")]
    Semantic(String),
    #[error("usage: {0}")]
    Usage(String),
}

impl Error {
    /// Exit code used by the command-line tool: 2 for usage/parse problems, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Semantic(_) | Error::Usage(_) | Error::InhomogeneousRelation(_) => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
