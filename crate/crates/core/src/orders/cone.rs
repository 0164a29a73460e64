//! Term-order equivalence classes of a finite polynomial set.
//!
//! Two weights are equivalent for `F` when they select the same leading term
//! in every `f_i`. Instead of building the Minkowski sum of Newton polytopes
//! and walking its normal fan, each candidate tuple of leading exponents is
//! tested directly with an exact LP: the tuple is a class iff some `ω ≥ 0`
//! satisfies `⟨ω, t_i − u⟩ > 0` for every other exponent `u` of `f_i`. By the
//! uniqueness of vertex decompositions in Minkowski sums these tuples are
//! exactly the vertices of the affine Newton polyhedron.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lp::{LinearProgram, LpOutcome};
use crate::polyring::{ExponentVector, Polynomial, Rational, TermOrder, WeightVector};

/// One chosen leading exponent per input polynomial.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeadingTuple(Vec<ExponentVector>);

impl LeadingTuple {
    pub fn new(choices: Vec<ExponentVector>) -> Self {
        Self(choices)
    }

    pub fn choices(&self) -> &[ExponentVector] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True when every choice is a term of the matching polynomial.
    pub fn is_valid_for(&self, polys: &[Polynomial]) -> bool {
        self.0.len() == polys.len()
            && self
                .0
                .iter()
                .zip(polys)
                .all(|(e, f)| f.coefficient(e).is_some())
    }
}

impl fmt::Debug for LeadingTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.0).finish()
    }
}

/// An equivalence class of term orders together with an integer weight that
/// strictly selects its leading tuple.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderClass {
    pub tuple: LeadingTuple,
    pub weight: WeightVector,
}

impl OrderClass {
    /// The weight refined by lex; it selects `tuple` in every generator.
    pub fn term_order(&self) -> TermOrder {
        TermOrder::from_weight(&self.weight)
    }

    /// Leading monomials rendered with the ring's variable names.
    pub fn leading_monomials(&self, names: &[String]) -> Vec<String> {
        self.tuple
            .choices()
            .iter()
            .map(|e| e.format_with(names))
            .collect()
    }
}

/// The leading exponent of each polynomial under `ord`.
pub fn leading_tuple(polys: &[Polynomial], ord: &TermOrder) -> Result<LeadingTuple> {
    polys
        .iter()
        .map(|f| f.initial_term(ord).map(|(e, _)| e))
        .collect::<Result<Vec<_>>>()
        .map(LeadingTuple)
}

/// The distinct nonzero vectors `t − u`, `u` ranging over the other terms.
fn selection_rows(f: &Polynomial, chosen: &ExponentVector, rows: &mut BTreeSet<Vec<i64>>) {
    for u in f.support() {
        if &u == chosen {
            continue;
        }
        rows.insert(
            chosen
                .entries()
                .iter()
                .zip(u.entries())
                .map(|(&a, &b)| i64::from(a) - i64::from(b))
                .collect(),
        );
    }
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Maximizes the minimal slack `ε` of `⟨ω, d⟩ ≥ ε` and `ω_j ≥ ε` over
/// `ω ≤ 1`. Returns the optimal `(ω, ε)` if `ε > 0`.
///
/// The selection condition is open, so asking for a strictly positive `ω`
/// loses no class and keeps certificates inside the positive orthant.
fn max_slack(nvars: usize, rows: &BTreeSet<Vec<i64>>) -> Option<(Vec<Rational>, Rational)> {
    let mut lp = LinearProgram::new(nvars + 1);
    let mut objective = vec![Rational::zero(); nvars + 1];
    objective[nvars] = Rational::one();
    lp.set_objective(objective);
    for d in rows {
        let mut row: Vec<Rational> = d.iter().map(|&v| q(-v)).collect();
        row.push(Rational::one());
        lp.add_le(row, Rational::zero());
    }
    for j in 0..nvars {
        let mut row = vec![Rational::zero(); nvars + 1];
        row[j] = -Rational::one();
        row[nvars] = Rational::one();
        lp.add_le(row, Rational::zero());
    }
    for j in 0..=nvars {
        let mut row = vec![Rational::zero(); nvars + 1];
        row[j] = Rational::one();
        lp.add_le(row, Rational::one());
    }
    match lp.solve() {
        LpOutcome::Optimal { mut x, value } if value.is_positive() => {
            x.truncate(nvars);
            Some((x, value))
        }
        _ => None,
    }
}

/// Clears denominators and divides by the gcd.
fn primitive_weight(omega: &[Rational]) -> Option<WeightVector> {
    let lcm = omega
        .iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = omega
        .iter()
        .map(|r| r.numer() * (&lcm / r.denom()))
        .collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if gcd.is_zero() {
        return None;
    }
    let entries = ints
        .iter()
        .map(|v| (v / &gcd).to_i64())
        .collect::<Option<Vec<_>>>()?;
    WeightVector::new(entries).ok()
}

fn selects_strictly(weight: &WeightVector, rows: &BTreeSet<Vec<i64>>) -> bool {
    rows.iter().all(|d| {
        d.iter()
            .zip(weight.entries())
            .map(|(a, b)| a * b)
            .sum::<i64>()
            > 0
    })
}

fn certify(nvars: usize, rows: &BTreeSet<Vec<i64>>) -> Option<WeightVector> {
    if rows.is_empty() {
        return WeightVector::new(vec![1; nvars]).ok();
    }
    let (omega, _) = max_slack(nvars, rows)?;
    let weight = primitive_weight(&omega)?;
    debug_assert!(selects_strictly(&weight, rows));
    Some(weight)
}

/// An integer `ω > 0` that strictly selects `tuple` in every polynomial, or
/// `None` when the cone of such weights misses the positive orthant (or the
/// tuple does not fit `polys`).
pub fn cone_feasibility(polys: &[Polynomial], tuple: &LeadingTuple) -> Option<WeightVector> {
    if !tuple.is_valid_for(polys) {
        return None;
    }
    let nvars = polys.first()?.ring().nvars();
    let mut rows = BTreeSet::new();
    for (f, t) in polys.iter().zip(tuple.choices()) {
        selection_rows(f, t, &mut rows);
    }
    certify(nvars, &rows)
}

/// Like [`cone_feasibility`], but returns a certificate maximizing
/// `objective · ω` over the cone slice `⟨ω, d⟩ ≥ ε*/2, ε*/2 ≤ ω ≤ 1`, where `ε*`
/// is the optimal slack. Used to produce alternative representatives of the
/// same class.
pub fn cone_feasibility_with_objective(
    polys: &[Polynomial],
    tuple: &LeadingTuple,
    objective: &[i64],
) -> Option<WeightVector> {
    if !tuple.is_valid_for(polys) {
        return None;
    }
    let nvars = polys.first()?.ring().nvars();
    assert_eq!(objective.len(), nvars);
    let mut rows = BTreeSet::new();
    for (f, t) in polys.iter().zip(tuple.choices()) {
        selection_rows(f, t, &mut rows);
    }
    if rows.is_empty() {
        return certify(nvars, &rows);
    }
    let (_, slack) = max_slack(nvars, &rows)?;
    let half = slack / q(2);

    let mut lp = LinearProgram::new(nvars);
    lp.set_objective(objective.iter().map(|&c| q(c)).collect());
    for d in &rows {
        lp.add_le(d.iter().map(|&v| q(-v)).collect(), -half.clone());
    }
    for j in 0..nvars {
        let mut row = vec![Rational::zero(); nvars];
        row[j] = Rational::one();
        lp.add_le(row.clone(), Rational::one());
        row[j] = -Rational::one();
        lp.add_le(row, -half.clone());
    }
    let LpOutcome::Optimal { x, .. } = lp.solve() else {
        return None;
    };
    let weight = primitive_weight(&x)?;
    debug_assert!(selects_strictly(&weight, &rows));
    Some(weight)
}

pub(crate) fn validate_generators(polys: &[Polynomial]) -> Result<()> {
    let first = polys.first().ok_or(Error::EmptyInput)?;
    for f in polys {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if f.ring() != first.ring() {
            return Err(Error::RingMismatch);
        }
    }
    Ok(())
}

/// All equivalence classes of `~_F` whose cone meets the nonnegative orthant,
/// sorted by leading tuple.
///
/// Candidate exponents that no `ω ≥ 0` selects within their own polynomial
/// are dropped first; the remaining tuples are grown one polynomial at a
/// time and infeasible prefixes are cut with the LP.
pub fn extract_weight_vectors(polys: &[Polynomial]) -> Result<Vec<OrderClass>> {
    validate_generators(polys)?;
    let nvars = polys[0].ring().nvars();

    let candidates: Vec<Vec<ExponentVector>> = polys
        .iter()
        .map(|f| {
            f.support()
                .into_iter()
                .filter(|u| {
                    let mut rows = BTreeSet::new();
                    selection_rows(f, u, &mut rows);
                    rows.is_empty() || max_slack(nvars, &rows).is_some()
                })
                .collect()
        })
        .collect();

    let search = Search {
        polys,
        candidates: &candidates,
        nvars,
    };
    let mut classes: Vec<OrderClass> = candidates[0]
        .par_iter()
        .map(|first| {
            let mut rows = BTreeSet::new();
            selection_rows(&polys[0], first, &mut rows);
            let mut out = Vec::new();
            search.descend(vec![first.clone()], rows, &mut out);
            out
        })
        .flatten()
        .collect();
    classes.sort_by(|a, b| a.tuple.cmp(&b.tuple));
    Ok(classes)
}

struct Search<'a> {
    polys: &'a [Polynomial],
    candidates: &'a [Vec<ExponentVector>],
    nvars: usize,
}

impl Search<'_> {
    fn descend(
        &self,
        prefix: Vec<ExponentVector>,
        rows: BTreeSet<Vec<i64>>,
        out: &mut Vec<OrderClass>,
    ) {
        let depth = prefix.len();
        if depth == self.polys.len() {
            if let Some(weight) = certify(self.nvars, &rows) {
                out.push(OrderClass {
                    tuple: LeadingTuple(prefix),
                    weight,
                });
            }
            return;
        }
        for choice in &self.candidates[depth] {
            let mut next_rows = rows.clone();
            selection_rows(&self.polys[depth], choice, &mut next_rows);
            let grew = next_rows.len() > rows.len();
            let is_leaf = depth + 1 == self.polys.len();
            // leaves are certified above; inner nodes only need a feasibility cut
            if grew && !is_leaf && max_slack(self.nvars, &next_rows).is_none() {
                continue;
            }
            let mut next = prefix.clone();
            next.push(choice.clone());
            self.descend(next, next_rows, out);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::Ring;

    fn example_33() -> Vec<Polynomial> {
        let r = Ring::new(["x", "y"]).unwrap();
        vec![
            Polynomial::from_int_terms(&r, &[([2, 0], 1), ([0, 2], 1)]).unwrap(),
            Polynomial::from_int_terms(&r, &[([1, 1], 1)]).unwrap(),
            Polynomial::from_int_terms(&r, &[([0, 2], 1)]).unwrap(),
        ]
    }

    fn tuple(v: &[[u32; 2]]) -> LeadingTuple {
        LeadingTuple::new(v.iter().map(|e| ExponentVector::from(*e)).collect())
    }

    #[test]
    fn green_cone_certificate() {
        let f = example_33();
        let w = cone_feasibility(&f, &tuple(&[[2, 0], [1, 1], [0, 2]])).unwrap();
        let e = w.entries();
        assert!(e[0] > e[1] && e[1] >= 0, "{w:?}");
    }

    #[test]
    fn red_cone_certificate() {
        let f = example_33();
        let w = cone_feasibility(&f, &tuple(&[[0, 2], [1, 1], [0, 2]])).unwrap();
        let e = w.entries();
        assert!(e[1] > e[0] && e[0] >= 0, "{w:?}");
    }

    #[test]
    fn linear_binomial() {
        let r = Ring::new(["x", "y"]).unwrap();
        let f = vec![Polynomial::from_int_terms(&r, &[([1, 0], 1), ([0, 1], 1)]).unwrap()];
        let w = cone_feasibility(&f, &tuple(&[[1, 0]])).unwrap();
        assert!(w.entries()[0] > w.entries()[1]);
    }

    #[test]
    fn constant_term_is_never_selected() {
        let r = Ring::new(["x", "y"]).unwrap();
        let f = vec![Polynomial::from_int_terms(&r, &[([1, 1], 2), ([0, 0], -1)]).unwrap()];
        assert!(cone_feasibility(&f, &tuple(&[[0, 0]])).is_none());
    }

    #[test]
    fn invalid_tuple_is_not_feasible() {
        let f = example_33();
        assert!(cone_feasibility(&f, &tuple(&[[1, 1], [1, 1], [0, 2]])).is_none());
        assert!(cone_feasibility(&f, &tuple(&[[2, 0]])).is_none());
    }

    #[test]
    fn two_classes_for_example_33() {
        let classes = extract_weight_vectors(&example_33()).unwrap();
        assert_eq!(classes.len(), 2);
        assert_eq!(classes[0].tuple, tuple(&[[0, 2], [1, 1], [0, 2]]));
        assert_eq!(classes[1].tuple, tuple(&[[2, 0], [1, 1], [0, 2]]));
    }

    #[test]
    fn alternative_certificates_stay_in_the_cone() {
        let f = example_33();
        let t = tuple(&[[2, 0], [1, 1], [0, 2]]);
        let a = cone_feasibility_with_objective(&f, &t, &[0, 1]).unwrap();
        let b = cone_feasibility_with_objective(&f, &t, &[0, -1]).unwrap();
        assert_ne!(a, b);
        for w in [a, b] {
            assert_eq!(leading_tuple(&f, &TermOrder::from_weight(&w)).unwrap(), t);
        }
    }

    #[test]
    fn input_validation() {
        assert_eq!(extract_weight_vectors(&[]), Err(Error::EmptyInput));
        let r = Ring::new(["x"]).unwrap();
        assert_eq!(
            extract_weight_vectors(&[Polynomial::zero(&r)]),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn monomials_have_one_class() {
        let r = Ring::new(["x", "y"]).unwrap();
        let f = vec![Polynomial::from_int_terms(&r, &[([1, 1], 1)]).unwrap()];
        let classes = extract_weight_vectors(&f).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].weight.entries(), &[1, 1]);
    }
}
