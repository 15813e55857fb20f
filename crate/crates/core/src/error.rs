use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a supported prime modulus")]
    InvalidPrime(u32),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("not a group: {axiom} fails at {witness:?}")]
    NotAGroup {
        axiom: &'static str,
        witness: Vec<usize>,
    },

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("group is not nilpotent")]
    NotNilpotent,

    #[error("subgroup is not central")]
    NotCentral,

    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),

    #[error("no complement exists: {0}")]
    NoComplement(String),

    #[error("group orders differ: {0}")]
    SizeMismatch(String),

    #[error("order {order} is too small for {family}")]
    OrderTooSmall { family: &'static str, order: usize },

    #[error("invalid action: {0}")]
    InvalidAction(String),

    #[error("search failed: {0}")]
    SearchFailed(String),

    #[error("elements belong to different algebras")]
    AlgebraMismatch,

    #[error("parse error: {0}")]
    Parse(String),
}
