//! Hilbert functions of a finitely generated graded subalgebra and of the
//! monomial algebra generated by the leading terms.
//!
//! The degree-`t` piece of `K[F]` is spanned by `f_i · S_{t − deg f_i}`, so
//! `h_S(t)` is computed degree by degree from an echelon basis of each piece.
//! This spans the same space as all products `∏ f_i^{v_i}` of degree `t`.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::orders::{validate_generators, OrderClass};
use crate::polyring::{ExponentVector, Polynomial, Rational};

/// Default largest degree compared by the Hilbert criterion.
pub const DEFAULT_HILBERT_BOUND: u32 = 12;

/// `values[t − 1] = h_{K[in(F)]}(t)` for `t = 1..=bound`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HilbertVector {
    pub values: Vec<u64>,
}

/// Outcome of comparing `h_S` and `h_{K[in(F)]}` up to a degree bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertCheck {
    pub is_basis: bool,
    pub degrees_checked: u32,
    /// True when `degrees_checked` is below the sufficient degree bound, so a
    /// positive answer only holds up to that degree.
    pub truncated: bool,
    pub first_mismatch: Option<u32>,
    pub warning: Option<String>,
}

/// A positive grading for which every generator is homogeneous: the standard
/// grading when possible, otherwise the degree in a single variable (as for
/// inputs multiplied by a fresh variable `t`).
pub fn detect_grading(gens: &[Polynomial]) -> Result<Vec<i64>> {
    validate_generators(gens)?;
    let n = gens[0].ring().nvars();
    let positive = |w: &[i64]| {
        gens.iter()
            .all(|f| f.homogeneous_degree(w).is_some_and(|d| d > 0))
    };
    let standard = vec![1i64; n];
    if positive(&standard) {
        return Ok(standard);
    }
    for j in 0..n {
        let mut w = vec![0i64; n];
        w[j] = 1;
        if positive(&w) {
            return Ok(w);
        }
    }
    Err(Error::NonHomogeneous)
}

fn generator_degrees(gens: &[Polynomial], grading: &[i64]) -> Vec<u32> {
    gens.iter()
        .map(|f| {
            f.homogeneous_degree(grading)
                .expect("homogeneous generator") as u32
        })
        .collect()
}

/// `s² · d^{n+1}` with `d` the largest generator degree, saturating.
pub fn sufficient_degree_bound(gens: &[Polynomial]) -> Result<u64> {
    let grading = detect_grading(gens)?;
    let d = u64::from(
        generator_degrees(gens, &grading)
            .into_iter()
            .max()
            .unwrap_or(1),
    );
    let s = gens.len() as u64;
    let n = gens[0].ring().nvars() as u32;
    Ok(s.saturating_mul(s).saturating_mul(d.saturating_pow(n + 1)))
}

/// Number of distinct monomials of each degree `1..=bound` in the monoid
/// generated by `leads`.
pub fn monoid_hilbert_counts(leads: &[ExponentVector], degrees: &[u32], bound: u32) -> Vec<u64> {
    let mut pieces: Vec<HashSet<ExponentVector>> = Vec::with_capacity(bound as usize + 1);
    let nvars = leads.first().map_or(0, ExponentVector::len);
    pieces.push(HashSet::from([ExponentVector::zero(nvars)]));
    for t in 1..=bound {
        let mut piece = HashSet::new();
        for (a, &d) in leads.iter().zip(degrees) {
            if d == 0 || d > t {
                continue;
            }
            for m in &pieces[(t - d) as usize] {
                piece.insert(m.add(a));
            }
        }
        pieces.push(piece);
    }
    pieces[1..].iter().map(|p| p.len() as u64).collect()
}

type Row = BTreeMap<ExponentVector, Rational>;

/// Row echelon basis of a subspace of polynomials, pivoting on the largest
/// exponent in lexicographic order; pivot rows are monic.
#[derive(Default)]
struct Echelon {
    rows: HashMap<ExponentVector, Row>,
}

impl Echelon {
    fn insert(&mut self, mut row: Row) -> bool {
        while let Some((pivot, c)) = row.last_key_value() {
            let Some(basis_row) = self.rows.get(pivot) else {
                let pivot = pivot.clone();
                let inv = c.recip();
                for v in row.values_mut() {
                    *v *= &inv;
                }
                self.rows.insert(pivot, row);
                return true;
            };
            let c = c.clone();
            for (e, b) in basis_row {
                let entry = row.entry(e.clone()).or_insert_with(Rational::zero);
                *entry -= &c * b;
                if entry.is_zero() {
                    row.remove(e);
                }
            }
        }
        false
    }

    fn len(&self) -> usize {
        self.rows.len()
    }

    fn into_rows(self) -> Vec<Row> {
        let mut rows: Vec<(ExponentVector, Row)> = self.rows.into_iter().collect();
        rows.sort_by(|a, b| a.0.cmp(&b.0));
        rows.into_iter().map(|(_, r)| r).collect()
    }
}

fn times(row: &Row, f: &Polynomial) -> Row {
    let mut out = Row::new();
    for (e, c) in row {
        for (g, d) in f.terms() {
            let entry = out.entry(e.add(g)).or_insert_with(Rational::zero);
            *entry += c * d;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `dim_K K[F]_t` for `t = 1..=bound` under `grading`.
pub fn subalgebra_hilbert_counts(gens: &[Polynomial], grading: &[i64], bound: u32) -> Vec<u64> {
    let degrees = generator_degrees(gens, grading);
    let nvars = gens[0].ring().nvars();
    let mut pieces: Vec<Vec<Row>> = Vec::with_capacity(bound as usize + 1);
    pieces.push(vec![Row::from([(
        ExponentVector::zero(nvars),
        Rational::one(),
    )])]);
    let mut counts = Vec::with_capacity(bound as usize);
    for t in 1..=bound {
        let mut echelon = Echelon::default();
        for (f, &d) in gens.iter().zip(&degrees) {
            if d > t {
                continue;
            }
            for row in &pieces[(t - d) as usize] {
                echelon.insert(times(row, f));
            }
        }
        counts.push(echelon.len() as u64);
        pieces.push(echelon.into_rows());
    }
    counts
}

pub(crate) fn truncation_warning(checked: u32, sufficient: u64) -> Option<String> {
    (u64::from(checked) < sufficient).then(|| {
        format!(
            "Hilbert functions compared up to degree {checked} only (sufficient bound {sufficient}); \
             a positive answer is inconclusive beyond that degree"
        )
    })
}

fn class_leads(gens: &[Polynomial], cls: &OrderClass) -> Result<Vec<ExponentVector>> {
    if !cls.tuple.is_valid_for(gens) {
        return Err(Error::InvalidLeadingTuple);
    }
    Ok(cls.tuple.choices().to_vec())
}

/// Hilbert function of `K[in(F)]` for the class, degrees `1..=bound`.
pub fn hilbert_vector(gens: &[Polynomial], cls: &OrderClass, bound: u32) -> Result<HilbertVector> {
    let grading = detect_grading(gens)?;
    let leads = class_leads(gens, cls)?;
    let degrees = generator_degrees(gens, &grading);
    Ok(HilbertVector {
        values: monoid_hilbert_counts(&leads, &degrees, bound),
    })
}

/// The subalgebra side of the Hilbert criterion, shared by all classes of
/// one generating set.
pub(crate) struct HilbertReference {
    pub(crate) degrees: Vec<u32>,
    pub(crate) counts: Vec<u64>,
    pub(crate) truncated: bool,
    pub(crate) sufficient: u64,
}

impl HilbertReference {
    pub(crate) fn new(gens: &[Polynomial], bound: Option<u32>) -> Result<Self> {
        let grading = detect_grading(gens)?;
        let sufficient = sufficient_degree_bound(gens)?;
        let cap = bound.unwrap_or(DEFAULT_HILBERT_BOUND);
        let checked = u64::from(cap).min(sufficient) as u32;
        Ok(Self {
            degrees: generator_degrees(gens, &grading),
            counts: subalgebra_hilbert_counts(gens, &grading, checked),
            truncated: u64::from(checked) < sufficient,
            sufficient,
        })
    }

    pub(crate) fn degrees_checked(&self) -> u32 {
        self.counts.len() as u32
    }

    pub(crate) fn warning(&self) -> Option<String> {
        truncation_warning(self.degrees_checked(), self.sufficient)
    }

    pub(crate) fn check(&self, leads: &[ExponentVector]) -> HilbertCheck {
        let initial = monoid_hilbert_counts(leads, &self.degrees, self.degrees_checked());
        let first_mismatch = initial
            .iter()
            .zip(&self.counts)
            .position(|(a, b)| a != b)
            .map(|i| i as u32 + 1);
        let is_basis = first_mismatch.is_none();
        HilbertCheck {
            is_basis,
            degrees_checked: self.degrees_checked(),
            truncated: self.truncated,
            first_mismatch,
            warning: if is_basis { self.warning() } else { None },
        }
    }
}

/// Compares `h_{K[F]}(t)` with `h_{K[in(F)]}(t)` for `t` up to `bound`
/// (default [`DEFAULT_HILBERT_BOUND`]) or the sufficient bound, whichever is
/// smaller. Requires a grading in which every generator is homogeneous of
/// positive degree.
pub fn is_sagbi_hilbert(
    gens: &[Polynomial],
    cls: &OrderClass,
    bound: Option<u32>,
) -> Result<HilbertCheck> {
    let leads = class_leads(gens, cls)?;
    Ok(HilbertReference::new(gens, bound)?.check(&leads))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orders::extract_weight_vectors;
    use crate::polyring::Ring;

    fn example_33() -> Vec<Polynomial> {
        let r = Ring::new(["x", "y"]).unwrap();
        vec![
            Polynomial::from_int_terms(&r, &[([2, 0], 1), ([0, 2], 1)]).unwrap(),
            Polynomial::from_int_terms(&r, &[([1, 1], 1)]).unwrap(),
            Polynomial::from_int_terms(&r, &[([0, 2], 1)]).unwrap(),
        ]
    }

    #[test]
    fn squares() {
        let r = Ring::new(["x", "y"]).unwrap();
        let f = vec![
            Polynomial::from_int_terms(&r, &[([2, 0], 1)]).unwrap(),
            Polynomial::from_int_terms(&r, &[([0, 2], 1)]).unwrap(),
        ];
        let classes = extract_weight_vectors(&f).unwrap();
        assert_eq!(classes.len(), 1);
        let h = hilbert_vector(&f, &classes[0], 4).unwrap();
        assert_eq!(h.values, vec![0, 2, 0, 3]);
        assert!(is_sagbi_hilbert(&f, &classes[0], Some(6)).unwrap().is_basis);
    }

    #[test]
    fn example_33_classes() {
        let f = example_33();
        let classes = extract_weight_vectors(&f).unwrap();
        let red = is_sagbi_hilbert(&f, &classes[0], Some(3)).unwrap();
        assert!(!red.is_basis);
        assert_eq!(red.first_mismatch, Some(2));
        let green = is_sagbi_hilbert(&f, &classes[1], Some(6)).unwrap();
        assert!(green.is_basis);
        assert!(green.truncated);
        assert!(green.warning.is_some());
        let hr = hilbert_vector(&f, &classes[0], 3).unwrap();
        let hg = hilbert_vector(&f, &classes[1], 3).unwrap();
        assert_eq!(hg.values, vec![0, 3, 0]);
        assert_eq!(hr.values, vec![0, 2, 0]);
    }

    #[test]
    fn single_monomial() {
        let r = Ring::new(["x", "y"]).unwrap();
        let f = vec![Polynomial::from_int_terms(&r, &[([1, 1], 1)]).unwrap()];
        let classes = extract_weight_vectors(&f).unwrap();
        let check = is_sagbi_hilbert(&f, &classes[0], None).unwrap();
        assert!(check.is_basis);
        // s²·d^{n+1} = 1·2³ is below the default cap
        assert_eq!(check.degrees_checked, 8);
        assert!(!check.truncated);
        assert!(check.warning.is_none());
    }

    #[test]
    fn grading_detection() {
        let r = Ring::new(["t", "x"]).unwrap();
        let f = vec![
            Polynomial::from_int_terms(&r, &[([1, 0], 1)]).unwrap(),
            Polynomial::from_int_terms(&r, &[([1, 2], 1), ([1, 0], 1)]).unwrap(),
        ];
        assert_eq!(detect_grading(&f).unwrap(), vec![1, 0]);
        let g = vec![Polynomial::from_int_terms(&r, &[([0, 2], 1), ([0, 0], 1)]).unwrap()];
        assert_eq!(detect_grading(&g), Err(Error::NonHomogeneous));
    }

    #[test]
    fn subalgebra_counts_match_brute_force_rank() {
        let f = example_33();
        assert_eq!(subalgebra_hilbert_counts(&f, &[1, 1], 4), vec![0, 3, 0, 5]);
    }
}
