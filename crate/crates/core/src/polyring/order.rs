//! Weight vectors and the term orders they induce.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;

use super::ExponentVector;
use crate::error::{Error, Result};

/// A nonnegative, primitive, nonzero integer weight `ω`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector(Vec<i64>);

impl WeightVector {
    /// Normalizes `entries` to a primitive vector (divides by the gcd).
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if let Some(bad) = entries.iter().find(|&&w| w < 0) {
            return Err(Error::InvalidWeight(format!("negative entry {bad}")));
        }
        let gcd = entries.iter().fold(0i64, |acc, &w| acc.gcd(&w));
        if gcd == 0 {
            return Err(Error::InvalidWeight("all entries are zero".into()));
        }
        Ok(Self(entries.into_iter().map(|w| w / gcd).collect()))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dot(&self, exponent: &ExponentVector) -> i64 {
        exponent.dot(&self.0)
    }
}

impl fmt::Debug for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|w| w.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// A total order on monomials: a sequence of nonnegative weight rows compared
/// in turn, with lexicographic order on the variable sequence as the final
/// tie-break.
///
/// The common case is a single [`WeightVector`]; elimination orders use
/// several rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermOrder {
    nvars: usize,
    rows: Vec<Vec<i64>>,
}

impl TermOrder {
    /// `x^a ≻ x^b` iff `⟨ω,a⟩ > ⟨ω,b⟩`, or the weights tie and `a >_lex b`.
    pub fn from_weight(weight: &WeightVector) -> Self {
        Self {
            nvars: weight.len(),
            rows: vec![weight.entries().to_vec()],
        }
    }

    /// Pure lexicographic order with the first variable largest.
    pub fn lex(nvars: usize) -> Self {
        Self {
            nvars,
            rows: Vec::new(),
        }
    }

    /// Graded lexicographic order.
    pub fn grlex(nvars: usize) -> Self {
        Self {
            nvars,
            rows: vec![vec![1; nvars]],
        }
    }

    /// Matrix order from nonnegative weight rows, refined by lex.
    pub fn from_rows(nvars: usize, rows: Vec<Vec<i64>>) -> Result<Self> {
        for row in &rows {
            if row.len() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    found: row.len(),
                });
            }
            if row.iter().any(|&w| w < 0) {
                return Err(Error::InvalidWeight(
                    "term order rows must be nonnegative".into(),
                ));
            }
        }
        Ok(Self { nvars, rows })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// The leading weight row, when there is one.
    pub fn weight(&self) -> Option<&[i64]> {
        self.rows.first().map(Vec::as_slice)
    }

    pub fn cmp(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        for row in &self.rows {
            match a.dot(row).cmp(&b.dot(row)) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        a.cmp(b)
    }

    pub fn is_greater(&self, a: &ExponentVector, b: &ExponentVector) -> bool {
        self.cmp(a, b) == Ordering::Greater
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_is_made_primitive() {
        let w = WeightVector::new(vec![4, 2, 6]).unwrap();
        assert_eq!(w.entries(), &[2, 1, 3]);
    }

    #[test]
    fn bad_weights_are_rejected() {
        assert!(matches!(
            WeightVector::new(vec![0, 0]),
            Err(Error::InvalidWeight(_))
        ));
        assert!(matches!(
            WeightVector::new(vec![1, -1]),
            Err(Error::InvalidWeight(_))
        ));
    }

    #[test]
    fn weight_then_lex() {
        let ord = TermOrder::from_weight(&WeightVector::new(vec![1, 1]).unwrap());
        let x2 = ExponentVector::from([2, 0]);
        let y2 = ExponentVector::from([0, 2]);
        let x = ExponentVector::from([1, 0]);
        assert_eq!(ord.cmp(&x2, &y2), Ordering::Greater);
        assert_eq!(ord.cmp(&y2, &x), Ordering::Greater);

        let ord = TermOrder::from_weight(&WeightVector::new(vec![1, 2]).unwrap());
        assert_eq!(ord.cmp(&x2, &y2), Ordering::Less);
    }

    #[test]
    fn zero_weight_coordinates_fall_back_to_lex() {
        let ord = TermOrder::from_weight(&WeightVector::new(vec![0, 1]).unwrap());
        // weight 0 on both: lex decides
        assert!(ord.is_greater(&ExponentVector::from([2, 0]), &ExponentVector::from([1, 0])));
        assert!(ord.is_greater(&ExponentVector::from([1, 0]), &ExponentVector::from([0, 0])));
    }
}
