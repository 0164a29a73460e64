//! Exact rational arithmetic, monomials, multivariate polynomials and term
//! orders.
//!
//! All values are immutable after construction and every operation is pure.

mod exponent;
mod order;
mod polynomial;

pub use exponent::ExponentVector;
pub use order::{TermOrder, WeightVector};
pub use polynomial::{homogenize_with_t, Polynomial, Rational, Ring};
