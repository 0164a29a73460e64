//! Exponent vectors of monomials, also used as lattice points.

use std::fmt;

/// The exponent `α` of a monomial `x^α`.
///
/// The derived ordering is lexicographic with the first variable most
/// significant, which is the deterministic iteration order of polynomial
/// term maps and the final tie-break of every [`TermOrder`](super::TermOrder).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(entries: Vec<u32>) -> Self {
        Self(entries)
    }

    pub fn zero(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    pub fn unit(nvars: usize, index: usize) -> Self {
        let mut entries = vec![0; nvars];
        entries[index] = 1;
        Self(entries)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    /// `⟨w, α⟩`.
    pub fn dot(&self, weights: &[i64]) -> i64 {
        debug_assert_eq!(weights.len(), self.0.len());
        self.0
            .iter()
            .zip(weights)
            .map(|(&e, &w)| i64::from(e) * w)
            .sum()
    }

    /// Exponent of the product of two monomials.
    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: u32) -> Self {
        Self(self.0.iter().map(|e| e * k).collect())
    }

    /// True when `x^self` divides `x^other`.
    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Exponent of `x^self / x^other`, if the quotient is a monomial.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Self)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Self(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Self) -> Self {
        Self(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Renders `x^α` with the given variable names, `1` for the zero exponent.
    pub fn format_with(&self, names: &[String]) -> String {
        let factors: Vec<String> = self
            .0
            .iter()
            .zip(names)
            .filter(|(e, _)| **e > 0)
            .map(|(&e, name)| {
                if e == 1 {
                    name.clone()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        }
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(entries: Vec<u32>) -> Self {
        Self(entries)
    }
}

impl<const N: usize> From<[u32; N]> for ExponentVector {
    fn from(entries: [u32; N]) -> Self {
        Self(entries.to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_order_puts_first_variable_first() {
        let x2 = ExponentVector::from([2, 0]);
        let xy5 = ExponentVector::from([1, 5]);
        assert!(x2 > xy5);
    }

    #[test]
    fn divisibility_and_quotients() {
        let a = ExponentVector::from([1, 1, 0]);
        let b = ExponentVector::from([2, 1, 3]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(b.checked_sub(&a), Some(ExponentVector::from([1, 0, 3])));
        assert_eq!(a.checked_sub(&b), None);
        assert_eq!(
            a.lcm(&ExponentVector::from([0, 2, 1])).entries(),
            &[1, 2, 1]
        );
    }

    #[test]
    fn formatting() {
        let names = vec!["x".to_string(), "y".to_string()];
        assert_eq!(ExponentVector::from([2, 1]).format_with(&names), "x^2*y");
        assert_eq!(ExponentVector::from([0, 0]).format_with(&names), "1");
    }
}
