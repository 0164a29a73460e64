mod common;

use std::collections::{BTreeSet, HashSet, VecDeque};

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use sagbi_gb::toric::{
    solve_monomial_membership, toric_ideal_generators, ExponentMatrix, ToricBinomial,
};
use sagbi_gb::{ExponentVector, Polynomial};

fn random_matrix(
    rng: &mut ChaCha8Rng,
    max_rows: usize,
    max_cols: usize,
    max_entry: u32,
) -> ExponentMatrix {
    let n = rng.gen_range(1..=max_rows);
    let s = rng.gen_range(1..=max_cols);
    let cols = (0..s)
        .map(|_| loop {
            let c: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=max_entry)).collect();
            if c.iter().any(|&x| x > 0) {
                break ExponentVector::new(c);
            }
        })
        .collect();
    ExponentMatrix::from_columns(cols).unwrap()
}

fn degree(v: &[u32]) -> u32 {
    v.iter().sum()
}

fn graded_lex_greater(a: &[u32], b: &[u32]) -> bool {
    degree(a) > degree(b) || (degree(a) == degree(b) && a > b)
}

#[test]
fn binomials_vanish_under_the_monomial_map() {
    let mut rng = common::rng(11);
    for _ in 0..100 {
        let a = random_matrix(&mut rng, 3, 5, 3);
        let x = common::ring(a.nrows());
        let images: Vec<Polynomial> = a
            .columns()
            .iter()
            .map(|c| Polynomial::monomial(&x, c.clone(), common::q(1)))
            .collect();
        for ToricBinomial { u, v } in toric_ideal_generators(&a) {
            let lifted = &common::product(&images, &u) - &common::product(&images, &v);
            assert!(lifted.is_zero(), "relation {u:?} - {v:?} does not vanish");
            assert!(u.iter().zip(&v).all(|(p, q)| *p == 0 || *q == 0));
            assert_ne!(u, v);
            assert!(graded_lex_greater(&u, &v));
        }
    }
}

/// Every `w ∈ ℕ^s` with `A w = b`.
fn fiber(a: &ExponentMatrix, b: &ExponentVector) -> Vec<Vec<u32>> {
    fn go(
        a: &ExponentMatrix,
        j: usize,
        residual: &mut Vec<u32>,
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if j == a.ncols() {
            if residual.iter().all(|&r| r == 0) {
                out.push(cur.clone());
            }
            return;
        }
        let col = a.columns()[j].entries();
        let max = col
            .iter()
            .zip(residual.iter())
            .filter(|(&c, _)| c > 0)
            .map(|(&c, &r)| r / c)
            .min()
            .unwrap_or(0);
        for k in 0..=max {
            for (r, &c) in residual.iter_mut().zip(col) {
                *r -= c * k;
            }
            cur.push(k);
            go(a, j + 1, residual, cur, out);
            cur.pop();
            for (r, &c) in residual.iter_mut().zip(col) {
                *r += c * k;
            }
        }
    }
    let mut out = Vec::new();
    go(a, 0, &mut b.entries().to_vec(), &mut Vec::new(), &mut out);
    out
}

/// Whether the moves `±(u − v)` connect all of `points`.
fn connected(points: &[Vec<u32>], moves: &[ToricBinomial]) -> bool {
    let all: HashSet<&Vec<u32>> = points.iter().collect();
    let mut seen: HashSet<Vec<u32>> = HashSet::from([points[0].clone()]);
    let mut queue = VecDeque::from([points[0].clone()]);
    while let Some(p) = queue.pop_front() {
        for m in moves {
            for (from, to) in [(&m.u, &m.v), (&m.v, &m.u)] {
                if p.iter().zip(from.iter()).all(|(a, b)| a >= b) {
                    let next: Vec<u32> = p
                        .iter()
                        .zip(from.iter())
                        .zip(to.iter())
                        .map(|((a, b), c)| a - b + c)
                        .collect();
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    seen.len() == all.len()
}

fn all_vectors_up_to_degree(s: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..s {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                let used = degree(&v);
                (0..=max - used).map(move |k| {
                    let mut w = v.clone();
                    w.push(k);
                    w
                })
            })
            .collect();
    }
    out
}

#[test]
fn generators_connect_every_fiber_up_to_degree_four() {
    let mut rng = common::rng(12);
    for _ in 0..50 {
        let a = random_matrix(&mut rng, 3, 5, 2);
        let gens = toric_ideal_generators(&a);
        let mut fibers_seen = BTreeSet::new();
        for u in all_vectors_up_to_degree(a.ncols(), 4) {
            let b = a.apply(&u);
            if !fibers_seen.insert(b.clone()) {
                continue;
            }
            let points = fiber(&a, &b);
            assert!(points.contains(&u));
            assert!(
                connected(&points, &gens),
                "fiber {b:?} of {a:?} is not connected by {gens:?}"
            );
        }
    }
}

#[test]
fn membership_matches_exhaustive_search() {
    let mut rng = common::rng(13);
    for _ in 0..200 {
        let a = random_matrix(&mut rng, 3, 4, 3);
        let b = common::random_exponent(&mut rng, a.nrows(), 8);
        let expected = !fiber(&a, &b).is_empty();
        match solve_monomial_membership(&a, &b) {
            Some(v) => {
                assert!(expected);
                assert_eq!(a.apply(&v), b);
            }
            None => assert!(!expected, "missed a solution for {b:?} in {a:?}"),
        }
    }
}

#[test]
fn membership_finds_planted_solutions() {
    let mut rng = common::rng(14);
    for _ in 0..200 {
        let a = random_matrix(&mut rng, 4, 6, 3);
        let v: Vec<u32> = (0..a.ncols()).map(|_| rng.gen_range(0..4)).collect();
        let b = a.apply(&v);
        let w = solve_monomial_membership(&a, &b).expect("planted solution exists");
        assert_eq!(a.apply(&w), b);
    }
}
