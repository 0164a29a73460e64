//! Exact Gröbner and SAGBI basis detection over the rationals.
//!
//! Given finitely many polynomials, the crate enumerates the equivalence
//! classes of term orders (one per realizable tuple of leading monomials),
//! decides in which classes the set is a Gröbner basis of its ideal or a
//! SAGBI basis of its subalgebra, and ranks classes when detection fails.

pub mod error;
pub mod groebner;
pub mod lp;
pub mod orders;
pub mod polyring;
pub mod sagbi;
pub mod toric;

pub use error::{Error, Result};
pub use orders::{extract_weight_vectors, LeadingTuple, OrderClass};
pub use polyring::{ExponentVector, Polynomial, Rational, Ring, TermOrder, WeightVector};
