use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("modulus polynomial is not monic over the base ring")]
    NonMonic,

    #[error("operation requires a commutative ring")]
    NonCommutative,

    #[error("operation is undefined for the zero ring")]
    ZeroRing,

    #[error("ring axioms violated: {0}")]
    AxiomViolation(String),

    #[error("ring order {0} exceeds the supported maximum of {1}")]
    TooLarge(usize, usize),

    #[error("element set is not an ideal: {0}")]
    NotAnIdeal(String),

    #[error("ring {0} is not weakly tripotent")]
    NotWeaklyTripotent(String),

    #[error("enumeration bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("unknown filter term `{0}`")]
    UnknownPredicate(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid homomorphism: {0}")]
    InvalidHomomorphism(String),
}
