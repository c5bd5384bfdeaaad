use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the zero polynomial has no finite root count")]
    ZeroPolynomial,
    #[error("boundary dimension {k} out of range 1..={max}")]
    DimensionOutOfRange { k: usize, max: usize },
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("not a subcomplex: {0}")]
    NotSubcomplex(String),
    #[error("cocycle condition fails on {}", .0.join(", "))]
    NotCocycle(Vec<String>),
    #[error("sign cocycle condition fails on {}", .0.join(", "))]
    NotSignCocycle(Vec<String>),
    #[error("specialization at s = 0 is outside the Laurent locus")]
    ZeroSpecialization,
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid character table: {0}")]
    InvalidCharacterTable(String),
    #[error("invalid group action: {0}")]
    InvalidAction(String),
    #[error("cocycle is not invariant: {}", .0.join(", "))]
    NotInvariant(Vec<String>),
    #[error("action is not free: {0}")]
    NotFree(String),
    #[error("quotient is not simplicial: {0}")]
    NotAdmissible(String),
    #[error("unknown representation {0:?}")]
    UnknownRepresentation(String),
    #[error("invalid restriction: {0}")]
    InvalidRestriction(String),
    #[error("internal integrality fault: {0}")]
    IntegralityFault(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}
