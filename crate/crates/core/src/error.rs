use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not coprime to the cyclotomic order {1}")]
    NotCoprime(i64, u64),

    #[error("zero input to {0}")]
    ZeroInput(&'static str),

    #[error("inexact division in {0}")]
    InexactDivision(&'static str),

    #[error("mismatched cyclotomic orders {0} and {1}")]
    OrderMismatch(u64, u64),

    #[error("invalid Lie type: {0}")]
    InvalidType(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("weight is not in the root lattice: {0:?}")]
    NotInRootLattice(Vec<i64>),

    #[error("{0} is not an alcove label")]
    NotALabel(String),

    #[error("iteration cap reached in {0}")]
    IterationCap(&'static str),

    #[error("resource guard: {0}")]
    ResourceGuard(String),

    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
