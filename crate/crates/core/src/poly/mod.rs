//! Polynomial arithmetic over Q, prime fields and their small extensions.

mod field;
mod monomial;
mod parse;
mod polynomial;
mod univariate;

pub use field::{is_prime, Coeff, ExtensionField, Field, MAX_EXTENSION_DEGREE};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::{identifiers, parse_poly};
pub use polynomial::{Poly, Ring, WeightedDegree};
pub use univariate::UniPoly;

pub(crate) use polynomial::same_ring;

/// Errors from polynomial construction and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown variable '{0}'")]
    UnknownVariable(String),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),
    #[error("expected {expected} values, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("{0}")]
    Field(String),
}
