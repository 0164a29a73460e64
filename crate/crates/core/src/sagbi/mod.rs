//! SAGBI basis criteria, detection over order classes, and rankings of
//! term orders.

mod hilbert;
mod rank;
mod subduction;

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::orders::{extract_weight_vectors, validate_generators, OrderClass};
use crate::polyring::{ExponentVector, Polynomial, TermOrder};
use crate::toric::{toric_ideal_generators, ToricBinomial};

pub use hilbert::{
    detect_grading, hilbert_vector, is_sagbi_hilbert, monoid_hilbert_counts,
    subalgebra_hilbert_counts, sufficient_degree_bound, HilbertCheck, HilbertVector,
    DEFAULT_HILBERT_BOUND,
};
pub use rank::{rank_classes, rank_orders, RankCriterion, RankKey, RankedGroup};
pub use subduction::{
    lead_outside_monoid, subduction, subduction_with_cap, SubductionResult, SubductionStep,
    DEFAULT_SUBDUCTION_CAP,
};

use hilbert::HilbertReference;
use subduction::Subductor;

/// Which criterion decides SAGBI membership of a class.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SagbiMethod {
    #[default]
    Subduction,
    /// Hilbert function comparison up to the given degree (or the sufficient
    /// bound if smaller).
    Hilbert { bound: u32 },
}

/// A relation among the leading monomials whose lift does not subduce to
/// zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SagbiFailure {
    pub relation: ToricBinomial,
    pub remainder: Polynomial,
}

/// Relations of degree at most two among the columns, found by hashing
/// sums. Any relation lifts to an element of the subalgebra, so a nonzero
/// remainder here already refutes the class.
fn low_degree_relations(leads: &[ExponentVector]) -> Vec<ToricBinomial> {
    let s = leads.len();
    let mut out = Vec::new();
    let mut seen: HashMap<ExponentVector, Vec<u32>> = HashMap::new();
    let mut consider =
        |sum: ExponentVector, v: Vec<u32>, out: &mut Vec<ToricBinomial>| match seen.get(&sum) {
            None => {
                seen.insert(sum, v);
            }
            Some(first) => {
                if first.iter().zip(&v).all(|(a, b)| *a == 0 || *b == 0) {
                    out.push(ToricBinomial {
                        u: first.clone(),
                        v,
                    });
                }
            }
        };
    for i in 0..s {
        let mut v = vec![0u32; s];
        v[i] = 1;
        consider(leads[i].clone(), v, &mut out);
    }
    for i in 0..s {
        for j in i..s {
            let mut v = vec![0u32; s];
            v[i] += 1;
            v[j] += 1;
            consider(leads[i].add(&leads[j]), v, &mut out);
        }
    }
    out
}

fn check_class(gens: &[Polynomial], cls: &OrderClass) -> Result<()> {
    validate_generators(gens)?;
    if !cls.tuple.is_valid_for(gens) {
        return Err(Error::InvalidLeadingTuple);
    }
    Ok(())
}

fn first_failure(
    gens: &[Polynomial],
    ord: &TermOrder,
    relations: &[ToricBinomial],
) -> Result<Option<SagbiFailure>> {
    let found = relations
        .par_iter()
        .map_init(
            || Subductor::new(gens, ord).expect("validated generators"),
            |sub, rel| {
                sub.relation_remainder(&rel.u, &rel.v, DEFAULT_SUBDUCTION_CAP)
                    .map(|r| (!r.is_zero()).then_some((rel, r)))
            },
        )
        .find_first(|r| !matches!(r, Ok(None)));
    match found {
        None => Ok(None),
        Some(Err(e)) => Err(e),
        Some(Ok(Some((rel, remainder)))) => Ok(Some(SagbiFailure {
            relation: rel.clone(),
            remainder,
        })),
        Some(Ok(None)) => unreachable!(),
    }
}

/// The first relation among the leading monomials (in a fixed order) whose
/// lift has a nonzero subduction remainder, or `None` when the class is a
/// SAGBI class.
pub fn sagbi_failure(gens: &[Polynomial], cls: &OrderClass) -> Result<Option<SagbiFailure>> {
    check_class(gens, cls)?;
    let ord = cls.term_order();
    let leads = cls.tuple.choices();
    if let Some(fail) = first_failure(gens, &ord, &low_degree_relations(leads))? {
        return Ok(Some(fail));
    }
    let a = crate::toric::ExponentMatrix::from_columns(leads.to_vec())?;
    first_failure(gens, &ord, &toric_ideal_generators(&a))
}

/// True iff every generator of the toric ideal of the leading monomials lifts
/// to a polynomial that subduces to zero.
pub fn is_sagbi_subduction(gens: &[Polynomial], cls: &OrderClass) -> Result<bool> {
    sagbi_failure(gens, cls).map(|f| f.is_none())
}

/// The criterion verdict for each class, in order. With the Hilbert method
/// the subalgebra side is computed once.
pub fn sagbi_verdicts(
    gens: &[Polynomial],
    classes: &[OrderClass],
    method: SagbiMethod,
) -> Result<Vec<bool>> {
    match method {
        SagbiMethod::Subduction => classes
            .par_iter()
            .map(|cls| is_sagbi_subduction(gens, cls))
            .collect(),
        SagbiMethod::Hilbert { bound } => {
            let reference = HilbertReference::new(gens, Some(bound))?;
            classes
                .par_iter()
                .map(|cls| {
                    check_class(gens, cls)?;
                    Ok(reference.check(cls.tuple.choices()).is_basis)
                })
                .collect()
        }
    }
}

/// A note to attach to Hilbert-method results whose degree range stops short
/// of the sufficient bound.
pub fn hilbert_bound_warning(gens: &[Polynomial], bound: u32) -> Result<Option<String>> {
    Ok(hilbert::truncation_warning(
        bound,
        sufficient_degree_bound(gens)?,
    ))
}

/// Classes of `~_F` in which `F` is a SAGBI basis of the algebra it
/// generates.
pub fn weight_vectors_realizing_sagbi(
    gens: &[Polynomial],
    method: SagbiMethod,
) -> Result<Vec<OrderClass>> {
    let classes = extract_weight_vectors(gens)?;
    let verdicts = sagbi_verdicts(gens, &classes, method)?;
    Ok(classes
        .into_iter()
        .zip(verdicts)
        .filter_map(|(c, ok)| ok.then_some(c))
        .collect())
}

/// The first class in which `F` is not a SAGBI basis, if any.
pub fn universal_sagbi_counterexample(gens: &[Polynomial]) -> Result<Option<OrderClass>> {
    let classes = extract_weight_vectors(gens)?;
    let verdicts = sagbi_verdicts(gens, &classes, SagbiMethod::Subduction)?;
    Ok(classes
        .into_iter()
        .zip(verdicts)
        .find(|(_, ok)| !ok)
        .map(|(c, _)| c))
}

/// True iff `F` is a SAGBI basis in every class of `~_F`.
pub fn is_universal_sagbi(gens: &[Polynomial]) -> Result<bool> {
    universal_sagbi_counterexample(gens).map(|c| c.is_none())
}
