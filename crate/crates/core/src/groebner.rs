//! Multivariate division, S-polynomials, Buchberger's algorithm and Gröbner
//! basis detection over the enumerated order classes.
//!
//! The criterion is evaluated with the weight-plus-lex refinement of each
//! class representative. The answer is constant on the open cone of the class,
//! and the refinement selects the same leading tuple, so one check per class
//! decides the whole class.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::sync::Arc;

use num_traits::Zero;
use rayon::prelude::*;

use crate::error::Result;
use crate::orders::{extract_weight_vectors, validate_generators, OrderClass};
use crate::polyring::{ExponentVector, Polynomial, Rational, Ring, TermOrder};

/// `f = Σ quotients[i]·g_i + remainder`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionResult {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

type Term = (ExponentVector, Rational);

/// Terms sorted ascending in a fixed term order; the leading term is last.
#[derive(Clone, Debug)]
struct SortedPoly {
    terms: Vec<Term>,
}

impl SortedPoly {
    fn from_poly(f: &Polynomial, ord: &TermOrder) -> Self {
        let mut terms: Vec<Term> = f.terms().map(|(e, c)| (e.clone(), c.clone())).collect();
        terms.sort_by(|a, b| ord.cmp(&a.0, &b.0));
        Self { terms }
    }

    fn to_poly(&self, ring: &Arc<Ring>) -> Polynomial {
        Polynomial::from_terms(ring, self.terms.iter().cloned())
            .expect("terms come from the same ring")
    }

    fn lead(&self) -> Option<&Term> {
        self.terms.last()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn make_monic(&mut self) {
        if let Some((_, lc)) = self.terms.last() {
            let inv = lc.recip();
            for (_, c) in self.terms.iter_mut() {
                *c *= &inv;
            }
        }
    }

    /// `self − c · x^shift · other`, merging in order.
    fn sub_scaled(
        &self,
        c: &Rational,
        shift: &ExponentVector,
        other: &SortedPoly,
        ord: &TermOrder,
    ) -> SortedPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other
            .terms
            .iter()
            .map(|(e, k)| (e.add(shift), -(k * c)))
            .peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some(x), Some(y)) => match ord.cmp(&x.0, &y.0) {
                    Ordering::Less => out.push(a.next().unwrap().clone()),
                    Ordering::Greater => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let (e, k1) = a.next().unwrap().clone();
                        let (_, k2) = b.next().unwrap();
                        let sum = k1 + k2;
                        if !sum.is_zero() {
                            out.push((e, sum));
                        }
                    }
                },
            }
        }
        SortedPoly { terms: out }
    }
}

/// Full reduction of `f` by `divisors`; returns the remainder only.
fn reduce(f: SortedPoly, divisors: &[SortedPoly], ord: &TermOrder) -> SortedPoly {
    let mut p = f;
    let mut remainder: Vec<Term> = Vec::new();
    while let Some((lead, lc)) = p.lead().cloned() {
        let divisor = divisors
            .iter()
            .find(|g| g.lead().is_some_and(|(e, _)| e.divides(&lead)));
        match divisor {
            Some(g) => {
                let (ge, gc) = g.lead().unwrap();
                let shift = lead.checked_sub(ge).unwrap();
                p = p.sub_scaled(&(lc / gc), &shift, g, ord);
            }
            None => {
                remainder.push(p.terms.pop().unwrap());
            }
        }
    }
    remainder.reverse();
    SortedPoly { terms: remainder }
}

/// Multivariate division of `f` by `divisors`; at each step the first divisor
/// in list order whose leading monomial divides the current lead is used.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial], ord: &TermOrder) -> DivisionResult {
    let ring = f.ring();
    let sorted: Vec<SortedPoly> = divisors
        .iter()
        .map(|g| SortedPoly::from_poly(g, ord))
        .collect();
    let mut quotients: Vec<Polynomial> = divisors.iter().map(|_| Polynomial::zero(ring)).collect();
    let mut p = SortedPoly::from_poly(f, ord);
    let mut remainder: Vec<Term> = Vec::new();
    while let Some((lead, lc)) = p.lead().cloned() {
        let hit = sorted
            .iter()
            .position(|g| g.lead().is_some_and(|(e, _)| e.divides(&lead)));
        match hit {
            Some(i) => {
                let (ge, gc) = sorted[i].lead().unwrap();
                let shift = lead.checked_sub(ge).unwrap();
                let c = lc / gc;
                p = p.sub_scaled(&c, &shift, &sorted[i], ord);
                quotients[i].add_term(shift, c);
            }
            None => remainder.push(p.terms.pop().unwrap()),
        }
    }
    DivisionResult {
        quotients,
        remainder: Polynomial::from_terms(ring, remainder).expect("same ring"),
    }
}

fn s_poly_sorted(f: &SortedPoly, g: &SortedPoly, ord: &TermOrder) -> SortedPoly {
    let (fe, fc) = f.lead().expect("nonzero");
    let (ge, gc) = g.lead().expect("nonzero");
    let lcm = fe.lcm(ge);
    let empty = SortedPoly { terms: Vec::new() };
    let scaled_f = empty.sub_scaled(&-fc.recip(), &lcm.checked_sub(fe).unwrap(), f, ord);
    scaled_f.sub_scaled(&gc.recip(), &lcm.checked_sub(ge).unwrap(), g, ord)
}

/// `(lcm/lt(f))·f − (lcm/lt(g))·g` with leading terms normalized so they
/// cancel.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, ord: &TermOrder) -> Polynomial {
    let a = SortedPoly::from_poly(f, ord);
    let b = SortedPoly::from_poly(g, ord);
    s_poly_sorted(&a, &b, ord).to_poly(f.ring())
}

/// True iff every S-polynomial of a pair of generators reduces to zero.
pub fn is_groebner_basis(gens: &[Polynomial], ord: &TermOrder) -> bool {
    let sorted: Vec<SortedPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| SortedPoly::from_poly(g, ord))
        .collect();
    for i in 0..sorted.len() {
        for j in i + 1..sorted.len() {
            let s = s_poly_sorted(&sorted[i], &sorted[j], ord);
            if !reduce(s, &sorted, ord).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Buchberger's algorithm with the coprime-leads criterion. Pairs are
/// processed by lcm degree, then lcm in lex order. The result is the reduced
/// Gröbner basis (monic, sorted by descending leading monomial).
pub fn buchberger(gens: &[Polynomial], ord: &TermOrder) -> Vec<Polynomial> {
    let Some(first) = gens.first() else {
        return Vec::new();
    };
    let ring = Arc::clone(first.ring());
    let mut basis: Vec<SortedPoly> = Vec::new();
    for g in gens {
        let mut p = SortedPoly::from_poly(g, ord);
        if !p.is_zero() {
            p.make_monic();
            basis.push(p);
        }
    }
    let mut pairs: BTreeSet<(u64, ExponentVector, usize, usize)> = BTreeSet::new();
    let pair_key = |basis: &[SortedPoly], i: usize, j: usize| {
        let lcm = basis[i].lead().unwrap().0.lcm(&basis[j].lead().unwrap().0);
        (lcm.total_degree(), lcm, i, j)
    };
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.insert(pair_key(&basis, i, j));
        }
    }
    while let Some(key) = pairs.pop_first() {
        let (_, _, i, j) = key;
        if basis[i]
            .lead()
            .unwrap()
            .0
            .is_coprime(&basis[j].lead().unwrap().0)
        {
            continue;
        }
        let s = s_poly_sorted(&basis[i], &basis[j], ord);
        let mut r = reduce(s, &basis, ord);
        if r.is_zero() {
            continue;
        }
        r.make_monic();
        basis.push(r);
        let k = basis.len() - 1;
        for i in 0..k {
            pairs.insert(pair_key(&basis, i, k));
        }
    }
    interreduce(basis, ord)
        .into_iter()
        .map(|p| p.to_poly(&ring))
        .collect()
}

fn interreduce(basis: Vec<SortedPoly>, ord: &TermOrder) -> Vec<SortedPoly> {
    // minimal basis: drop elements whose lead is divisible by another lead
    let mut minimal: Vec<SortedPoly> = Vec::new();
    for (i, p) in basis.iter().enumerate() {
        let lead = &p.lead().unwrap().0;
        let redundant = basis.iter().enumerate().any(|(j, q)| {
            let other = &q.lead().unwrap().0;
            j != i && other.divides(lead) && (other != lead || j < i)
        });
        if !redundant {
            minimal.push(p.clone());
        }
    }
    let mut reduced: Vec<SortedPoly> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<SortedPoly> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, q)| q.clone())
            .collect();
        let mut head = minimal[i].clone();
        let lead = head.terms.pop().unwrap();
        let mut tail = reduce(head, &others, ord);
        tail.terms.push(lead);
        tail.make_monic();
        reduced.push(tail);
    }
    reduced.sort_by(|a, b| ord.cmp(&b.lead().unwrap().0, &a.lead().unwrap().0));
    reduced
}

/// Classes of `~_G` for which `G` is a Gröbner basis of the ideal it
/// generates.
pub fn weight_vectors_realizing_gb(gens: &[Polynomial]) -> Result<Vec<OrderClass>> {
    let classes = extract_weight_vectors(gens)?;
    let verdicts: Vec<bool> = classes
        .par_iter()
        .map(|cls| is_groebner_basis(gens, &cls.term_order()))
        .collect();
    Ok(classes
        .into_iter()
        .zip(verdicts)
        .filter_map(|(c, ok)| ok.then_some(c))
        .collect())
}

/// Universal Gröbner check; returns the first failing class when there is
/// one.
pub fn universal_gb_counterexample(gens: &[Polynomial]) -> Result<Option<OrderClass>> {
    validate_generators(gens)?;
    let classes = extract_weight_vectors(gens)?;
    let verdicts: Vec<bool> = classes
        .par_iter()
        .map(|cls| is_groebner_basis(gens, &cls.term_order()))
        .collect();
    Ok(classes
        .into_iter()
        .zip(verdicts)
        .find(|(_, ok)| !ok)
        .map(|(c, _)| c))
}

/// True iff `G` is a Gröbner basis for every class of `~_G`.
pub fn is_universal_gb(gens: &[Polynomial]) -> Result<bool> {
    universal_gb_counterexample(gens).map(|c| c.is_none())
}
