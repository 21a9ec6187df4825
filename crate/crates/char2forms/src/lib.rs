//! Exact computer algebra for quadratic form theory in characteristic 2:
//! binary field and rational function arithmetic, quadratic and biquadratic
//! etale algebras, Pfister forms with Witt decomposition and anisotropy
//! certification, structure-constant algebras (quaternions, tensor products,
//! degree-4 abelian crossed products) with reduced characteristic polynomials
//! and second trace forms, and a symbol calculus for the degree-wise
//! cohomology groups attached to the Artin-Schreier operator.

pub mod error;
pub mod ff;
pub mod multipoly;
pub mod ratfunc;
pub mod scalar;
pub mod unipoly;

pub use error::{AlgebraError, FormError, ScalarError};
pub use ff::{FFElement, FiniteFieldSpec};
pub use multipoly::{Monomial, MultiPoly};
pub use ratfunc::RatFunc;
pub use scalar::{BaseField, Scalar};
