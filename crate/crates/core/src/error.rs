use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("ambient dimensions differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("matrix is singular")]
    Singular,
    #[error("algebra is not nilpotent")]
    NotNilpotentAlgebra,
    #[error("subspace is not a two-sided ideal")]
    NotAnIdeal,
    #[error("subspace is not closed under the bracket")]
    NotClosed,
    #[error("sample element lies in the derived subspace")]
    SampleInDerivedSubspace,
    #[error("{family} requires {constraint}")]
    FamilyConstraint { family: &'static str, constraint: String },
    #[error("invalid scalar literal {0:?}")]
    ParseScalar(String),
    #[error("invalid algebra document: {0}")]
    InvalidDocument(String),
    #[error("invalid family spec: {0}")]
    InvalidSpec(String),
    #[error("empty operator list")]
    EmptyOperatorList,
    #[error("scale factor must be nonzero")]
    ZeroScale,
    #[error("pattern does not apply: {0}")]
    PatternMismatch(String),
    #[error("generator {generator} outside range {range}")]
    GeneratorRange { generator: String, range: String },
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
