use thiserror::Error;

/// Errors raised by the library.
///
/// Variants fall into two families: domain errors (bad input for a
/// mathematical operation) and invariant violations (`IntegralityViolation`,
/// `UnclassifiableLine`), which only fire if the implementation is wrong.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("characteristic {0} is not supported (need p >= 5)")]
    BadCharacteristic(u64),
    #[error("field of order {0} is too small (need q > 4)")]
    FieldTooSmall(u64),
    #[error("field of order {0} exceeds the supported table size")]
    FieldTooLarge(u64),
    #[error("modulus is not irreducible of the requested degree: {0}")]
    ReducibleModulus(String),
    #[error("polynomial modulus is zero")]
    ZeroModulus,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("unsupported form degree {0} (expected 1..=4)")]
    BadDegree(usize),
    #[error("form has vanishing discriminant")]
    SingularForm,
    #[error("form is identically zero")]
    ZeroForm,
    #[error("cross-ratio must avoid 0 and 1")]
    BadLambda,
    #[error("the two cubic forms are linearly dependent")]
    DependentForms,
    #[error("coordinates do not lie on the Klein quadric")]
    NotOnKleinQuadric,
    #[error("zero vector does not define a projective point")]
    ZeroVector,
    #[error("line lies in an osculating plane of the twisted cubic")]
    OsculatingLine,
    #[error("direction (s, t) must be nonzero")]
    ZeroDirection,
    #[error("line is not generic")]
    NonGenericLine,
    #[error("non-integral count in {0}")]
    IntegralityViolation(&'static str),
    #[error("non-generic line matches none of the ten orbit classes")]
    UnclassifiableLine,
    #[error("curve is singular (g2^3 = 27 g3^2)")]
    SingularCurve,
    #[error("q = {q} exceeds the configured bound {bound}")]
    BoundExceeded { q: u64, bound: u64 },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
