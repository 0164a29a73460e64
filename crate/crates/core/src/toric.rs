//! Toric ideals of relations among monomials, and monoid membership.
//!
//! `I_A` is computed by elimination: Buchberger on `⟨y_i − x^{α_i}⟩` in a
//! block order with every `x`-monomial above every `y`-monomial, keeping the
//! basis elements free of `x`. All `α_i` are nonnegative, so no saturation is
//! needed.

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groebner::buchberger;
use crate::polyring::{ExponentVector, Polynomial, Rational, Ring, TermOrder};

/// An `n × s` matrix of nonnegative integers stored by columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExponentMatrix {
    nrows: usize,
    columns: Vec<ExponentVector>,
}

impl ExponentMatrix {
    pub fn from_columns(columns: Vec<ExponentVector>) -> Result<Self> {
        let first = columns.first().ok_or(Error::EmptyInput)?;
        let nrows = first.len();
        if let Some(bad) = columns.iter().find(|c| c.len() != nrows) {
            return Err(Error::DimensionMismatch {
                expected: nrows,
                found: bad.len(),
            });
        }
        Ok(Self { nrows, columns })
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[ExponentVector] {
        &self.columns
    }

    /// `A · v`.
    pub fn apply(&self, v: &[u32]) -> ExponentVector {
        assert_eq!(v.len(), self.ncols());
        let mut out = vec![0u32; self.nrows];
        for (col, &k) in self.columns.iter().zip(v) {
            for (o, &a) in out.iter_mut().zip(col.entries()) {
                *o += a * k;
            }
        }
        ExponentVector::new(out)
    }
}

/// A relation `y^u − y^v` with `A·u = A·v`, `u ≠ v` and disjoint supports.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ToricBinomial {
    pub u: Vec<u32>,
    pub v: Vec<u32>,
}

impl ToricBinomial {
    pub fn degree(&self) -> u64 {
        self.u.iter().map(|&k| u64::from(k)).sum()
    }
}

fn graded_lex_greater(a: &[u32], b: &[u32]) -> bool {
    let da: u64 = a.iter().map(|&k| u64::from(k)).sum();
    let db: u64 = b.iter().map(|&k| u64::from(k)).sum();
    da > db || (da == db && a > b)
}

/// Generators of `I_A`, normalized with `u ≻ v` in graded lex order on `y`,
/// without duplicates, sorted.
pub fn toric_ideal_generators(a: &ExponentMatrix) -> Vec<ToricBinomial> {
    let n = a.nrows();
    let s = a.ncols();
    let names = (0..n)
        .map(|i| format!("x{i}"))
        .chain((0..s).map(|j| format!("y{j}")));
    let ring = Ring::new(names).expect("generated names are distinct identifiers");

    let mut gens = Vec::with_capacity(s);
    for (j, col) in a.columns().iter().enumerate() {
        let mut y = vec![0u32; n + s];
        y[n + j] = 1;
        let mut x = col.entries().to_vec();
        x.resize(n + s, 0);
        let g = Polynomial::from_terms(
            &ring,
            [
                (ExponentVector::new(y), Rational::one()),
                (ExponentVector::new(x), -Rational::one()),
            ],
        )
        .expect("lengths match");
        if !g.is_zero() {
            gens.push(g);
        }
    }

    // x-block degree first; then y graded by the degree of its monomial
    let mut eliminate = vec![1i64; n];
    eliminate.resize(n + s, 0);
    let mut y_grading = vec![0i64; n];
    y_grading.extend(a.columns().iter().map(|c| c.total_degree() as i64));
    let ord = TermOrder::from_rows(n + s, vec![eliminate, y_grading]).expect("nonnegative rows");

    let mut out = BTreeSet::new();
    for g in buchberger(&gens, &ord) {
        if g.terms()
            .any(|(e, _)| e.entries()[..n].iter().any(|&k| k > 0))
        {
            continue;
        }
        let terms: Vec<(&ExponentVector, &Rational)> = g.terms().collect();
        assert_eq!(terms.len(), 2, "toric ideals are generated by binomials");
        assert!(terms[0].1.clone() + terms[1].1.clone() == Rational::zero());
        let p = &terms[0].0.entries()[n..];
        let q = &terms[1].0.entries()[n..];
        let common: Vec<u32> = p.iter().zip(q).map(|(a, b)| *a.min(b)).collect();
        let p: Vec<u32> = p.iter().zip(&common).map(|(a, c)| a - c).collect();
        let q: Vec<u32> = q.iter().zip(&common).map(|(a, c)| a - c).collect();
        let (u, v) = if graded_lex_greater(&p, &q) {
            (p, q)
        } else {
            (q, p)
        };
        debug_assert_eq!(a.apply(&u), a.apply(&v));
        out.insert(ToricBinomial { u, v });
    }
    let mut out: Vec<ToricBinomial> = out.into_iter().collect();
    out.sort_by(|x, y| x.degree().cmp(&y.degree()).then_with(|| x.cmp(y)));
    out
}

/// Some `v ∈ ℕ^s` with `A·v = b`, by depth-first search.
///
/// Columns are tried in order of decreasing total degree and each
/// coordinate is bounded by the residual right-hand side.
pub fn solve_monomial_membership(a: &ExponentMatrix, b: &ExponentVector) -> Option<Vec<u32>> {
    if b.len() != a.nrows() {
        return None;
    }
    let mut order: Vec<usize> = (0..a.ncols())
        .filter(|&j| !a.columns()[j].is_zero())
        .collect();
    order.sort_by(|&i, &j| {
        a.columns()[j]
            .total_degree()
            .cmp(&a.columns()[i].total_degree())
            .then(i.cmp(&j))
    });
    // rows still coverable by the columns from position k on
    let mut coverable = vec![vec![false; a.nrows()]; order.len() + 1];
    for k in (0..order.len()).rev() {
        let col = a.columns()[order[k]].entries();
        for r in 0..a.nrows() {
            coverable[k][r] = coverable[k + 1][r] || col[r] > 0;
        }
    }
    let mut residual: Vec<u32> = b.entries().to_vec();
    let mut v = vec![0u32; a.ncols()];
    if dfs(a, &order, &coverable, 0, &mut residual, &mut v) {
        debug_assert_eq!(&a.apply(&v), b);
        Some(v)
    } else {
        None
    }
}

fn dfs(
    a: &ExponentMatrix,
    order: &[usize],
    coverable: &[Vec<bool>],
    k: usize,
    residual: &mut [u32],
    v: &mut [u32],
) -> bool {
    if residual.iter().all(|&r| r == 0) {
        return true;
    }
    if k == order.len() {
        return false;
    }
    if residual
        .iter()
        .zip(&coverable[k])
        .any(|(&r, &ok)| r > 0 && !ok)
    {
        return false;
    }
    let j = order[k];
    let col = a.columns()[j].entries();
    let bound = col
        .iter()
        .zip(residual.iter())
        .filter(|(&c, _)| c > 0)
        .map(|(&c, &r)| r / c)
        .min()
        .unwrap_or(0);
    for count in (0..=bound).rev() {
        for (r, &c) in residual.iter_mut().zip(col) {
            *r -= c * count;
        }
        v[j] = count;
        if dfs(a, order, coverable, k + 1, residual, v) {
            return true;
        }
        for (r, &c) in residual.iter_mut().zip(col) {
            *r += c * count;
        }
    }
    v[j] = 0;
    false
}
