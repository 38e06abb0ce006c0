use thiserror::Error;

use crate::exactlin::FieldSpec;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("coefficient {0} is not an element of {1}")]
    NotInField(String, FieldSpec),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid scalar `{0}`")]
    InvalidScalar(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("matrix is not invertible")]
    Singular,
    #[error("algebra is not associative")]
    NotAssociative,
    #[error("not an associative dialgebra")]
    NotDialgebra,
    #[error("map is not a derivation")]
    NotDerivation,
    #[error("derivation does not square to zero")]
    DerivationNotSquareZero,
    #[error("subspace is not an ideal")]
    NotIdeal,
    #[error("algebra is not zero-cubed")]
    NotZeroCubed,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
