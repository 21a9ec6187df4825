//! Error types shared across the crate.

use thiserror::Error;

/// Errors from the scalar tower (field elements, polynomials, fractions).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("extension degree {0} outside 1..=16")]
    UnsupportedDegree(u8),
    #[error("inversion of zero")]
    ZeroInverse,
    #[error("division by zero")]
    DivisionByZero,
    #[error("inexact multivariate division")]
    InexactDivision,
    #[error("denominator vanishes at the sample point")]
    Pole,
    #[error("assignment misses variable `{0}`")]
    MissingVariable(String),
    #[error("not a fourth power")]
    NotFourthPower,
    #[error("operation requires a univariate function, got {0} variables")]
    NotUnivariate(usize),
}

/// Errors from quadratic-form operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error("forms over different bases")]
    BaseMismatch,
    #[error("vector length {got} does not match form dimension {dim}")]
    DimensionMismatch { dim: usize, got: usize },
    #[error("scaling by zero")]
    ZeroScale,
    #[error("zero slot in Pfister descriptor")]
    ZeroSlot,
    #[error("operation requires a finite base field")]
    NotFiniteBase,
    #[error("unsupported block shape at `{0}`: {1}")]
    UnsupportedShape(String, String),
    #[error("scalar error: {0}")]
    Scalar(#[from] ScalarError),
}

/// Errors from structure-constant algebras.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("algebras over different bases")]
    BaseMismatch,
    #[error("quaternion slot a must be invertible")]
    NonInvertibleSlot,
    #[error("norm condition N(u)N(v) = N(w) fails")]
    NormCondition,
    #[error("commutation element system is singular (inconsistent parameters)")]
    CommutationUnsolvable,
    #[error("associativity fails on basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("tensor product dimension {0} exceeds the supported 16")]
    DimensionTooLarge(usize),
    #[error("degree {0} outside the supported {{2, 4}}")]
    UnsupportedAlgebraDegree(usize),
    #[error("element of a different algebra")]
    ParentMismatch,
    #[error("non-invertible etale element")]
    NotInvertible,
    #[error("regular characteristic polynomial violates the Prd^n pattern at exponent {0}")]
    CharpolyPattern(usize),
    #[error("polar form of the second trace form has a nonzero radical")]
    RadicalDetected,
    #[error("second trace form is not quadratic on samples")]
    NotQuadratic,
    #[error("twist variable `{0}` collides with an existing variable")]
    VariableCollision(String),
    #[error("scalar error: {0}")]
    Scalar(#[from] ScalarError),
    #[error("form error: {0}")]
    Form(#[from] FormError),
}
