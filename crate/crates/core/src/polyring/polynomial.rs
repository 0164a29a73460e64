//! Sparse multivariate polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{ExponentVector, TermOrder, WeightVector};
use crate::error::{Error, Result};

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Ordered list of variable names shared by the polynomials of one ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
}

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Arc<Self>> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::InvalidVariable(name.clone()));
            }
            if names[..i].contains(name) {
                return Err(Error::VariableCollision(name.clone()));
            }
        }
        Ok(Arc::new(Self { names }))
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

fn same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A polynomial: a finite map from exponent vectors to nonzero rationals.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: BTreeMap<ExponentVector, Rational>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Self {
            ring: Arc::clone(ring),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn constant(ring: &Arc<Ring>, c: Rational) -> Self {
        Self::monomial(ring, ExponentVector::zero(ring.nvars()), c)
    }

    /// The variable `x_index`.
    pub fn var(ring: &Arc<Ring>, index: usize) -> Self {
        Self::monomial(
            ring,
            ExponentVector::unit(ring.nvars(), index),
            Rational::one(),
        )
    }

    pub fn monomial(ring: &Arc<Ring>, exponent: ExponentVector, c: Rational) -> Self {
        assert_eq!(
            exponent.len(),
            ring.nvars(),
            "exponent length must match the ring"
        );
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponent, c);
        }
        Self {
            ring: Arc::clone(ring),
            terms,
        }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, merging
    /// repeated exponents and dropping zero coefficients.
    pub fn from_terms(
        ring: &Arc<Ring>,
        terms: impl IntoIterator<Item = (ExponentVector, Rational)>,
    ) -> Result<Self> {
        let mut out = Self::zero(ring);
        for (e, c) in terms {
            if e.len() != ring.nvars() {
                return Err(Error::DimensionMismatch {
                    expected: ring.nvars(),
                    found: e.len(),
                });
            }
            out.add_term(e, c);
        }
        Ok(out)
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_int_terms<const N: usize>(
        ring: &Arc<Ring>,
        terms: &[([u32; N], i64)],
    ) -> Result<Self> {
        Self::from_terms(
            ring,
            terms.iter().map(|(e, c)| {
                (
                    ExponentVector::from(*e),
                    Rational::from_integer(BigInt::from(*c)),
                )
            }),
        )
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lexicographic order of their exponents.
    pub fn terms(
        &self,
    ) -> impl DoubleEndedIterator<Item = (&ExponentVector, &Rational)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coefficient(&self, exponent: &ExponentVector) -> Option<&Rational> {
        self.terms.get(exponent)
    }

    pub(crate) fn add_term(&mut self, exponent: ExponentVector, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exponent) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get() + c;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = Self::zero(&self.ring);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea.add(eb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Self {
            ring: Arc::clone(&self.ring),
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    /// `c · x^shift · self`.
    pub fn mul_term(&self, shift: &ExponentVector, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Self {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (e.add(shift), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one(&self.ring);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// The unique `ord`-maximal term.
    pub fn leading_term(&self, ord: &TermOrder) -> Option<(&ExponentVector, &Rational)> {
        self.terms.iter().max_by(|(a, _), (b, _)| ord.cmp(a, b))
    }

    /// The unique `ord`-maximal term, as owned values.
    pub fn initial_term(&self, ord: &TermOrder) -> Result<(ExponentVector, Rational)> {
        self.leading_term(ord)
            .map(|(e, c)| (e.clone(), c.clone()))
            .ok_or(Error::ZeroPolynomial)
    }

    /// Sum of all terms whose exponent maximizes `⟨w, α⟩`.
    pub fn initial_form(&self, w: &WeightVector) -> Result<Self> {
        if w.len() != self.ring.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.ring.nvars(),
                found: w.len(),
            });
        }
        let top = self
            .terms
            .keys()
            .map(|e| w.dot(e))
            .max()
            .ok_or(Error::ZeroPolynomial)?;
        Ok(Self {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| w.dot(e) == top)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        })
    }

    /// Exponents of the nonzero terms, in ascending lexicographic order.
    pub fn support(&self) -> Vec<ExponentVector> {
        self.terms.keys().cloned().collect()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(ExponentVector::total_degree).max()
    }

    /// The common degree of all terms under `grading`, if the polynomial is
    /// homogeneous for it. `None` for the zero polynomial.
    pub fn homogeneous_degree(&self, grading: &[i64]) -> Option<i64> {
        let mut degrees = self.terms.keys().map(|e| e.dot(grading));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Re-embeds the polynomial in `target`, whose variables must include
    /// every variable of this ring.
    pub fn embed(&self, target: &Arc<Ring>) -> Result<Self> {
        let map: Vec<usize> = self
            .ring
            .names()
            .iter()
            .map(|n| {
                target
                    .index_of(n)
                    .ok_or_else(|| Error::InvalidVariable(n.clone()))
            })
            .collect::<Result<_>>()?;
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut entries = vec![0; target.nvars()];
            for (i, &k) in e.entries().iter().enumerate() {
                entries[map[i]] = k;
            }
            out.add_term(ExponentVector::new(entries), c.clone());
        }
        Ok(out)
    }
}

/// Adjoins a grading variable `t` as the first variable of a new ring and
/// returns `t · f` for each input.
pub fn homogenize_with_t(polys: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let Some(first) = polys.first() else {
        return Ok(Vec::new());
    };
    let ring = first.ring();
    if ring.index_of("t").is_some() {
        return Err(Error::VariableCollision("t".into()));
    }
    let target = Ring::new(std::iter::once("t".to_string()).chain(ring.names().iter().cloned()))?;
    let t = Polynomial::var(&target, 0);
    polys
        .iter()
        .map(|f| {
            if !same_ring(f.ring(), ring) {
                return Err(Error::RingMismatch);
            }
            Ok(&t * &f.embed(&target)?)
        })
        .collect()
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

fn format_coefficient(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Renders the polynomial in the input grammar, terms in descending
/// lexicographic order.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { "-" } else { "+" })?;
            }
            let monomial = e.format_with(self.ring.names());
            if e.is_zero() {
                write!(f, "{}", format_coefficient(&magnitude))?;
            } else if magnitude.is_one() {
                write!(f, "{monomial}")?;
            } else {
                write!(f, "{}*{monomial}", format_coefficient(&magnitude))?;
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    /// Panics when the operands belong to different rings.
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs)
            .expect("ring mismatch in polynomial addition")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs)
            .expect("ring mismatch in polynomial subtraction")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs)
            .expect("ring mismatch in polynomial multiplication")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}
