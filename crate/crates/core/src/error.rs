use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("modulus is not monic")]
    NonMonic,
    #[error("modulus is not squarefree")]
    NotSquarefree,
    #[error("bad modulus: {0}")]
    BadModulus(String),
    #[error("operands belong to different field contexts")]
    ContextMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("element shares a factor with the modulus and has no inverse")]
    NotInvertible,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is not square")]
    NotSquare,
    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("invalid parameter set: {0}")]
    BadParameters(String),
    #[error("missing or invalid root: {0}")]
    MissingRoot(String),
    #[error("bad representation spec: {0}")]
    BadSpec(String),
    #[error("constructed representation fails {0}")]
    ConstructionCheck(String),
    #[error("central element is not scalar")]
    NotScalar,
    #[error("bad predicate level {0}")]
    BadLevel(usize),
    #[error("witness subspace is not invariant")]
    InvalidWitness,
    #[error("roots unavailable in this field: {0}")]
    RootsUnavailable(String),
    #[error("algebra is not semisimple")]
    NotSemisimple,
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
