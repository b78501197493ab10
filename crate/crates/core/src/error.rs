use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SidonError {
    #[error("the set is empty")]
    EmptySet,

    #[error("need at least {required} elements, got {actual}")]
    TooFewElements { required: usize, actual: usize },

    #[error("arity must be at least {required}, got {actual}")]
    ArityTooSmall { required: usize, actual: usize },

    #[error("arity mismatch: form has {form} variables, arrangement has {arrangement}")]
    ArityMismatch { form: usize, arrangement: usize },

    #[error("order must be at least 1")]
    InvalidOrder,

    #[error("coefficient {index} is zero; linear form coefficients must be nonzero")]
    ZeroCoefficient { index: usize },

    #[error("a linear form needs at least one coefficient")]
    EmptyForm,

    #[error("duplicate element {0}")]
    DuplicateElement(Rational),

    #[error("zero has no inversion closure")]
    ZeroClosure,

    #[error("invalid anchor: {0}")]
    InvalidAnchor(String),

    #[error("affine scale must be nonzero")]
    ZeroScale,

    #[error("set is not normalized: it must contain both 0 and 1")]
    NotNormalized,

    #[error("no closed form for sets of size {0}; closed forms cover sizes 2 to 4")]
    UnsupportedSize(usize),

    #[error("element {0} is not a positive integer")]
    NotPositiveInteger(Rational),

    #[error("base {g} must exceed the largest element {max}")]
    BaseTooSmall { g: String, max: String },

    #[error("enumeration of {tuples} tuples exceeds the ceiling of {limit}")]
    TupleLimit { tuples: String, limit: u64 },

    #[error("cannot parse {token:?}: {reason}")]
    Parse { token: String, reason: String },
}

pub type Result<T> = std::result::Result<T, SidonError>;
