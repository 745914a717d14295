use thiserror::Error;

/// Errors shared by all modules.  Library operations are total wherever the
/// underlying algebra is; an error here always means the input left the
/// supported domain (or, for the `NotDivisible`-style variants, that an
/// exactness guarantee was violated, which is a bug upstream).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("denominator not supported: 1+β·({0}) does not factor into permitted (1+β·v) factors")]
    DenominatorNotSupported(String),
    #[error("exact division failed")]
    NotDivisible,
    #[error("series constant term is not 1")]
    BadConstantTerm,
    #[error("invalid generator {0} for group {1}")]
    InvalidGenerator(String, String),
    #[error("rank guard exceeded: {0}")]
    TooLarge(String),
    #[error("not a Grassmannian element: {0}")]
    NotGrassmannian(String),
    #[error("partition length exceeds variable count")]
    LengthExceedsN,
    #[error("polynomial is not in the span of the basis")]
    NotInSpan,
    #[error("s0/s1hat action on x-dependent input is only supported through the generating-function route")]
    UnsupportedXAction,
    #[error("negative power of two in a compatible-sequence term")]
    NegativeTwoPower,
    #[error("triangular solve hit a zero diagonal entry")]
    NonTriangular,
    #[error("nonzero residual after triangular solve")]
    ResidualNonzero,
    #[error("index out of range")]
    BadIndex,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
