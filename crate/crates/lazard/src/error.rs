//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator tables differ")]
    TableMismatch,
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("generator `{name}` has weight {got}, expected {want}")]
    GeneratorMismatch { name: String, want: u32, got: u32 },
    #[error("modulus {0} is not prime")]
    NotPrime(u32),
    #[error("inner series must have zero constant term")]
    NonzeroConstantTerm,
    #[error("series must have linear coefficient 1 in its variable")]
    NonunitLinear,
    #[error("series must be univariate for this operation")]
    NotUnivariate,
    #[error("truncation degree {have} is insufficient, need at least {need}")]
    Bound { need: u32, have: u32 },
    #[error("unknown axis `{0}`")]
    UnknownAxis(String),
    #[error("parse error at offset {offset}: expected {expected}")]
    Parse { offset: usize, expected: String },
    #[error("expression error at offset {offset}: {message}")]
    Eval { offset: usize, message: String },
    #[error("cache error: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
