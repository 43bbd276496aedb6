//! Crate-wide error type and result alias.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("modulus polynomial is not monic of degree {degree} or not irreducible over GF({p})")]
    BadModulus { p: u64, degree: usize },

    #[error("division by zero")]
    DivisionByZero,

    #[error("operands do not belong to the field {0}")]
    FieldMismatch(String),

    #[error("characteristic mismatch: {0} vs {1}")]
    CharacteristicMismatch(u64, u64),

    #[error("unsupported embedding: {0}")]
    UnsupportedEmbedding(String),

    #[error("requested {requested} units but the field has only {available}")]
    NotEnoughUnits { requested: usize, available: u64 },

    #[error("group invariant violated: {0}")]
    GroupInvariant(String),

    #[error("group order {order} exceeds cap {cap}")]
    OrderCap { order: usize, cap: usize },

    #[error("{0} is not a subgroup")]
    NotSubgroup(String),

    #[error("{0} is not a normal subgroup")]
    NotNormal(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("empty support")]
    EmptySupport,

    #[error("field too small: |k*| = {units} < {required}")]
    FieldTooSmall { units: u64, required: u64 },

    #[error("no candidate value for the last support element yields a regular algebra")]
    RealizeExhausted,

    #[error("weight function is not a class function")]
    NotClassFunction,

    #[error("not regular: {0}")]
    NotRegular(String),

    #[error("size {n} exceeds cap {cap}")]
    SizeCap { n: usize, cap: usize },

    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),

    #[error("verification failure: {0}")]
    Verification(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Exit-code class for the CLI: 1 usage/parse, 2 precondition,
    /// 3 verification failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) | Error::Io(_) | Error::Json(_) | Error::UnknownSuite(_) => 1,
            Error::Verification(_) => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
