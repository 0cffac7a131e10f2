use thiserror::Error;

/// Errors raised by the library.
///
/// Mathematical "negative" outcomes (an element that is not rationally smooth,
/// an arrangement that is not inductively free, a rejected certificate) are
/// ordinary values, not errors.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Cartan type `{0}`")]
    InvalidType(String),
    #[error("invalid Cartan datum: {0}")]
    InvalidDatum(String),
    #[error("generator index {index} out of range for rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },
    #[error("vector {0:?} is not a root of this system")]
    NotARoot(Vec<i64>),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("set of roots is not biconvex")]
    NotBiconvex,
    #[error("element is not a minimal coset representative for the given parabolic subset")]
    NotMinimalRepresentative,
    #[error("hyperplane {0:?} does not belong to the arrangement")]
    HyperplaneNotInArrangement(Vec<i64>),
    #[error("subspace is not a flat of the arrangement")]
    NotAFlat,
    #[error("flat is not a coatom of the arrangement")]
    NotACoatom,
    #[error("flat is not a modular coatom of the arrangement")]
    NotModular,
    #[error("zero normal vector")]
    ZeroNormal,
    #[error("arrangements with more than 128 hyperplanes are not supported (got {0})")]
    TooManyHyperplanes(usize),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("unknown pattern id `{0}`")]
    UnknownPattern(String),
    #[error("exceptional element w_{k}{l} is only defined for 5 <= l < k <= 8")]
    ExceptionalOutOfRange { k: usize, l: usize },
    #[error("type-A operation applied to a system of type {0}")]
    NotTypeA(String),
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),
    #[error("exhaustive scan of {size} elements exceeds the guard limit of {limit}")]
    GuardExceeded { size: u64, limit: u64 },
    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
