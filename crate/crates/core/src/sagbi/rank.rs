//! Rankings of order classes when no class (or several) yields a SAGBI basis.

use std::cmp::Ordering;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::orders::{extract_weight_vectors, LatticePolytope, OrderClass};
use crate::polyring::Polynomial;

use super::hilbert::{detect_grading, monoid_hilbert_counts, HilbertVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankCriterion {
    /// Larger Hilbert function of the initial algebra, compared degree by
    /// degree.
    Preferable,
    /// Larger dimension of the toric variety of the leading monomials, then
    /// larger degree.
    Nicer,
}

/// The quantity classes are compared by; larger is better.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RankKey {
    Nicer { dim: usize, degree: u64 },
    Preferable(HilbertVector),
}

impl RankKey {
    fn compare(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Self::Nicer { dim: a, degree: b }, Self::Nicer { dim: c, degree: d }) => {
                (a, b).cmp(&(c, d))
            }
            (Self::Preferable(a), Self::Preferable(b)) => a.values.cmp(&b.values),
            _ => unreachable!("keys of one ranking share a criterion"),
        }
    }
}

/// Classes that tie under the criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankedGroup {
    pub key: RankKey,
    pub classes: Vec<OrderClass>,
}

fn key_for(
    cls: &OrderClass,
    criterion: RankCriterion,
    degrees: &[u32],
    bound: u32,
) -> Result<RankKey> {
    Ok(match criterion {
        RankCriterion::Nicer => {
            let polytope = LatticePolytope::new(cls.tuple.choices().iter().cloned())?;
            RankKey::Nicer {
                dim: polytope.dim(),
                degree: polytope.normalized_volume(),
            }
        }
        RankCriterion::Preferable => RankKey::Preferable(HilbertVector {
            values: monoid_hilbert_counts(cls.tuple.choices(), degrees, bound),
        }),
    })
}

/// Ranks the given classes best first; ties share a group and keep the
/// input order.
pub fn rank_classes(
    gens: &[Polynomial],
    classes: Vec<OrderClass>,
    criterion: RankCriterion,
    hilbert_bound: u32,
) -> Result<Vec<RankedGroup>> {
    if classes.iter().any(|c| !c.tuple.is_valid_for(gens)) {
        return Err(Error::InvalidLeadingTuple);
    }
    let degrees: Vec<u32> = match criterion {
        RankCriterion::Preferable => {
            let grading = detect_grading(gens)?;
            gens.iter()
                .map(|f| f.homogeneous_degree(&grading).expect("graded input") as u32)
                .collect()
        }
        RankCriterion::Nicer => Vec::new(),
    };
    let keys: Vec<RankKey> = classes
        .par_iter()
        .map(|c| key_for(c, criterion, &degrees, hilbert_bound))
        .collect::<Result<_>>()?;
    let mut keyed: Vec<(RankKey, OrderClass)> = keys.into_iter().zip(classes).collect();
    // stable, so ties keep the input order
    keyed.sort_by(|a, b| b.0.compare(&a.0));
    let mut groups: Vec<RankedGroup> = Vec::new();
    for (key, cls) in keyed {
        match groups.last_mut() {
            Some(g) if g.key == key => g.classes.push(cls),
            _ => groups.push(RankedGroup {
                key,
                classes: vec![cls],
            }),
        }
    }
    Ok(groups)
}

/// Ranks all classes of `~_F`.
pub fn rank_orders(
    gens: &[Polynomial],
    criterion: RankCriterion,
    hilbert_bound: u32,
) -> Result<Vec<RankedGroup>> {
    rank_classes(
        gens,
        extract_weight_vectors(gens)?,
        criterion,
        hilbert_bound,
    )
}
