#![allow(dead_code)]

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sagbi_gb::{ExponentVector, Polynomial, Rational, Ring, TermOrder, WeightVector};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ring(nvars: usize) -> Arc<Ring> {
    Ring::new((0..nvars).map(|i| format!("x{i}"))).unwrap()
}

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn nonzero_coeff(rng: &mut ChaCha8Rng) -> Rational {
    let mut c = 0;
    while c == 0 {
        c = rng.gen_range(-5i64..=5);
    }
    q(c)
}

pub fn random_exponent(rng: &mut ChaCha8Rng, nvars: usize, max_deg: u32) -> ExponentVector {
    let deg = rng.gen_range(0..=max_deg);
    let mut e = vec![0u32; nvars];
    for _ in 0..deg {
        e[rng.gen_range(0..nvars)] += 1;
    }
    ExponentVector::new(e)
}

/// Exponent of total degree exactly `deg`.
pub fn random_exponent_of_degree(rng: &mut ChaCha8Rng, nvars: usize, deg: u32) -> ExponentVector {
    let mut e = vec![0u32; nvars];
    for _ in 0..deg {
        e[rng.gen_range(0..nvars)] += 1;
    }
    ExponentVector::new(e)
}

/// A nonzero polynomial with up to `max_terms` terms of degree ≤ `max_deg`.
pub fn random_poly(
    rng: &mut ChaCha8Rng,
    ring: &Arc<Ring>,
    max_terms: usize,
    max_deg: u32,
) -> Polynomial {
    loop {
        let k = rng.gen_range(1..=max_terms);
        let terms: Vec<(ExponentVector, Rational)> = (0..k)
            .map(|_| {
                (
                    random_exponent(rng, ring.nvars(), max_deg),
                    nonzero_coeff(rng),
                )
            })
            .collect();
        let p = Polynomial::from_terms(ring, terms).unwrap();
        if !p.is_zero() {
            return p;
        }
    }
}

/// A nonzero homogeneous polynomial of total degree `deg`.
pub fn random_homogeneous(
    rng: &mut ChaCha8Rng,
    ring: &Arc<Ring>,
    max_terms: usize,
    deg: u32,
) -> Polynomial {
    loop {
        let k = rng.gen_range(1..=max_terms);
        let terms: Vec<(ExponentVector, Rational)> = (0..k)
            .map(|_| {
                (
                    random_exponent_of_degree(rng, ring.nvars(), deg),
                    nonzero_coeff(rng),
                )
            })
            .collect();
        let p = Polynomial::from_terms(ring, terms).unwrap();
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn random_positive_weight(rng: &mut ChaCha8Rng, nvars: usize, max: i64) -> WeightVector {
    WeightVector::new((0..nvars).map(|_| rng.gen_range(1..=max)).collect()).unwrap()
}

pub fn random_order(rng: &mut ChaCha8Rng, nvars: usize) -> TermOrder {
    TermOrder::from_weight(&random_positive_weight(rng, nvars, 20))
}

pub fn shuffle<T>(rng: &mut ChaCha8Rng, items: &mut [T]) {
    items.shuffle(rng);
}

/// `∏ gens[i]^{v[i]}`.
pub fn product(gens: &[Polynomial], v: &[u32]) -> Polynomial {
    let mut p = Polynomial::one(gens[0].ring());
    for (g, &k) in gens.iter().zip(v) {
        p = &p * &g.pow(k);
    }
    p
}

/// Rank of a dense rational matrix by fraction-exact Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    use num_traits::Zero;
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone() / pivot.clone();
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i][c..ncols].iter_mut().zip(&pivot_row[c..ncols]) {
                    *x -= f.clone() * y.clone();
                }
            }
        }
        r += 1;
    }
    r
}

/// All `v ∈ ℕ^s` with `Σ v_i · weights[i] = total`.
pub fn compositions(weights: &[u32], total: u32) -> Vec<Vec<u32>> {
    fn go(weights: &[u32], i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == weights.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let w = weights[i];
        let max = left.checked_div(w).unwrap_or(0);
        for k in 0..=max {
            cur.push(k);
            go(weights, i + 1, left - k * w, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(weights, 0, total, &mut Vec::new(), &mut out);
    out
}
