//! The subduction algorithm: repeatedly cancel the leading term of `f`
//! against a product of generators with the same leading monomial.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::orders::validate_generators;
use crate::polyring::{ExponentVector, Polynomial, Rational, TermOrder};
use crate::toric::{solve_monomial_membership, ExponentMatrix};

/// Default bound on the number of subduction steps.
pub const DEFAULT_SUBDUCTION_CAP: usize = 10_000;

/// One subtracted term `coefficient · ∏ f_i^{exponents[i]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubductionStep {
    pub coefficient: Rational,
    pub exponents: Vec<u32>,
}

/// `f = Σ steps + remainder`; the remainder is zero or its leading monomial
/// lies outside the monoid of leading monomials of the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubductionResult {
    pub remainder: Polynomial,
    pub steps: Vec<SubductionStep>,
}

/// Subduces `f` by `gens` under `ord`, giving up after
/// [`DEFAULT_SUBDUCTION_CAP`] steps.
pub fn subduction(
    f: &Polynomial,
    gens: &[Polynomial],
    ord: &TermOrder,
) -> Result<SubductionResult> {
    subduction_with_cap(f, gens, ord, DEFAULT_SUBDUCTION_CAP)
}

pub fn subduction_with_cap(
    f: &Polynomial,
    gens: &[Polynomial],
    ord: &TermOrder,
    cap: usize,
) -> Result<SubductionResult> {
    validate_generators(gens)?;
    if f.ring().names() != gens[0].ring().names() {
        return Err(Error::RingMismatch);
    }
    let mut sub = Subductor::new(gens, ord)?;
    sub.run(f, cap, true)
}

/// Subduction state shared across calls with the same generators: leading
/// data and a cache of generator powers.
pub(crate) struct Subductor<'a> {
    gens: &'a [Polynomial],
    ord: &'a TermOrder,
    leads: ExponentMatrix,
    lead_coeffs: Vec<Rational>,
    powers: Vec<Vec<Polynomial>>,
}

impl<'a> Subductor<'a> {
    pub(crate) fn new(gens: &'a [Polynomial], ord: &'a TermOrder) -> Result<Self> {
        let mut leads = Vec::with_capacity(gens.len());
        let mut lead_coeffs = Vec::with_capacity(gens.len());
        for g in gens {
            let (e, c) = g.initial_term(ord)?;
            leads.push(e);
            lead_coeffs.push(c);
        }
        let ring = gens[0].ring();
        Ok(Self {
            gens,
            ord,
            leads: ExponentMatrix::from_columns(leads)?,
            lead_coeffs,
            powers: gens.iter().map(|_| vec![Polynomial::one(ring)]).collect(),
        })
    }

    pub(crate) fn leads(&self) -> &ExponentMatrix {
        &self.leads
    }

    fn power(&mut self, i: usize, k: u32) -> &Polynomial {
        let k = k as usize;
        while self.powers[i].len() <= k {
            let next = &self.powers[i][self.powers[i].len() - 1] * &self.gens[i];
            self.powers[i].push(next);
        }
        &self.powers[i][k]
    }

    /// `∏ f_i^{v_i}`.
    pub(crate) fn product(&mut self, v: &[u32]) -> Polynomial {
        let mut out: Option<Polynomial> = None;
        for (i, &k) in v.iter().enumerate() {
            if k == 0 {
                continue;
            }
            let p = self.power(i, k).clone();
            out = Some(match out {
                None => p,
                Some(acc) => &acc * &p,
            });
        }
        out.unwrap_or_else(|| Polynomial::one(self.gens[0].ring()))
    }

    /// `∏ lc(f_i)^{v_i}`.
    pub(crate) fn lead_coeff_product(&self, v: &[u32]) -> Rational {
        let mut c = Rational::one();
        for (lc, &k) in self.lead_coeffs.iter().zip(v) {
            for _ in 0..k {
                c *= lc;
            }
        }
        c
    }

    pub(crate) fn run(
        &mut self,
        f: &Polynomial,
        cap: usize,
        record: bool,
    ) -> Result<SubductionResult> {
        let mut rest = f.clone();
        let mut steps = Vec::new();
        let mut count = 0usize;
        while let Some((lead, c)) = rest
            .leading_term(self.ord)
            .map(|(e, c)| (e.clone(), c.clone()))
        {
            let Some(v) = solve_monomial_membership(&self.leads, &lead) else {
                break;
            };
            if count == cap {
                return Err(Error::SubductionCapExceeded(cap));
            }
            count += 1;
            let coefficient = c / self.lead_coeff_product(&v);
            let p = self.product(&v).scale(&coefficient);
            rest = &rest - &p;
            if let Some((next, _)) = rest.leading_term(self.ord) {
                assert_eq!(
                    self.ord.cmp(next, &lead),
                    Ordering::Less,
                    "subduction must strictly decrease the leading monomial"
                );
            }
            if record {
                steps.push(SubductionStep {
                    coefficient,
                    exponents: v,
                });
            }
        }
        Ok(SubductionResult {
            remainder: rest,
            steps,
        })
    }

    /// Subduces `∏ f^u − (lc^u / lc^v) ∏ f^v`, whose leading terms cancel when
    /// `A·u = A·v`; returns the remainder.
    pub(crate) fn relation_remainder(
        &mut self,
        u: &[u32],
        v: &[u32],
        cap: usize,
    ) -> Result<Polynomial> {
        let scale = self.lead_coeff_product(u) / self.lead_coeff_product(v);
        let lhs = self.product(u);
        let rhs = self.product(v).scale(&scale);
        let s = &lhs - &rhs;
        debug_assert!(
            s.is_zero() || {
                let lead = self.leads.apply(u);
                s.coefficient(&lead).is_none_or(Zero::is_zero)
            }
        );
        Ok(self.run(&s, cap, false)?.remainder)
    }
}

/// The leading exponent of `f`, when it is not in the monoid generated by the
/// leading exponents of `gens`; used to certify nonzero remainders.
pub fn lead_outside_monoid(
    f: &Polynomial,
    gens: &[Polynomial],
    ord: &TermOrder,
) -> Result<Option<ExponentVector>> {
    validate_generators(gens)?;
    let Some((lead, _)) = f.leading_term(ord) else {
        return Ok(None);
    };
    let sub = Subductor::new(gens, ord)?;
    Ok(solve_monomial_membership(sub.leads(), lead)
        .is_none()
        .then(|| lead.clone()))
}
