use thiserror::Error;

use crate::semigroup::Int;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyInput,
    #[error("generator {0} is not positive")]
    NonPositiveGenerator(Int),
    #[error("gcd of generators is {0}, expected 1")]
    GcdNotOne(Int),
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("base {0} is not a positive element of the semigroup")]
    BaseNotInSemigroup(Int),
    #[error("{0} lies in the semigroup")]
    InSemigroup(Int),
    #[error("{0} is not an element of the semigroup")]
    NotInSemigroup(Int),
    #[error("exponent vector length does not match the ring")]
    DimensionMismatch,
    #[error("matrix does not have the expected two-row cyclic shape: {0}")]
    ShapeMismatch(String),
    #[error("resource cap exceeded: {0}")]
    CapExceeded(String),
    #[error("degree sweep reached ceiling {ceiling} without certification")]
    SweepCapExceeded { ceiling: Int },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("falsifying instance: {0}")]
    InternalContradiction(String),
    #[error("falsifying instance, non-integral parameter: {0}")]
    NonIntegralParameter(String),
    #[error("falsifying instance, certification failed: {0}")]
    CertificationFailed(String),
    #[error("certificate is not certified")]
    Uncertified,
    #[error("family validation failed: {0}")]
    ValidationFailed(String),
    #[error("family precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("parse error: {0}")]
    Parse(String),
}
