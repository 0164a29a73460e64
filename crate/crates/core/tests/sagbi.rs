mod common;

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use sagbi_gb::orders::{cone_feasibility_with_objective, leading_tuple};
use sagbi_gb::sagbi::{
    detect_grading, hilbert_vector, is_sagbi_hilbert, is_sagbi_subduction, lead_outside_monoid,
    monoid_hilbert_counts, rank_classes, sagbi_failure, subalgebra_hilbert_counts, subduction,
    weight_vectors_realizing_sagbi, RankCriterion, SagbiMethod,
};
use sagbi_gb::{extract_weight_vectors, ExponentVector, OrderClass, Polynomial, Rational};

fn random_generators(rng: &mut ChaCha8Rng, homogeneous: bool) -> Vec<Polynomial> {
    let nvars = rng.gen_range(2..=3);
    let r = common::ring(nvars);
    let k = rng.gen_range(1..=3);
    (0..k)
        .map(|_| {
            if homogeneous {
                let d = rng.gen_range(1..=3);
                common::random_homogeneous(rng, &r, 3, d)
            } else {
                common::random_poly(rng, &r, 3, 3)
            }
        })
        .collect()
}

#[test]
fn subduction_reconstructs_and_strictly_decreases() {
    let mut rng = common::rng(31);
    let mut nonzero_remainders = 0;
    for _ in 0..200 {
        let homogeneous = rng.gen_bool(0.5);
        let gens = random_generators(&mut rng, homogeneous);
        let r = gens[0].ring().clone();
        let ord = common::random_order(&mut rng, r.nvars());
        // an element of the algebra plus noise
        let mut f = common::random_poly(&mut rng, &r, 3, 4);
        for _ in 0..rng.gen_range(0..3) {
            let v: Vec<u32> = (0..gens.len()).map(|_| rng.gen_range(0..3)).collect();
            f = &f + &common::product(&gens, &v).scale(&common::nonzero_coeff(&mut rng));
        }
        let res = subduction(&f, &gens, &ord).unwrap();

        let mut total = res.remainder.clone();
        for step in &res.steps {
            total = &total + &common::product(&gens, &step.exponents).scale(&step.coefficient);
        }
        assert_eq!(total, f, "reconstruction");

        let leads: Vec<ExponentVector> = res
            .steps
            .iter()
            .map(|s| {
                common::product(&gens, &s.exponents)
                    .initial_term(&ord)
                    .unwrap()
                    .0
            })
            .collect();
        for w in leads.windows(2) {
            assert!(ord.is_greater(&w[0], &w[1]), "leads must strictly decrease");
        }
        if let (Some(first), Ok((lf, _))) = (leads.first(), f.initial_term(&ord)) {
            assert_eq!(first, &lf);
        }
        if !res.remainder.is_zero() {
            nonzero_remainders += 1;
            assert!(lead_outside_monoid(&res.remainder, &gens, &ord)
                .unwrap()
                .is_some());
        }
    }
    assert!(nonzero_remainders > 20);
}

/// `h(t)` for the monomial algebra by listing every `v` of degree `t`.
fn monoid_counts_by_listing(leads: &[ExponentVector], degrees: &[u32], bound: u32) -> Vec<u64> {
    (1..=bound)
        .map(|t| {
            common::compositions(degrees, t)
                .iter()
                .map(|v| {
                    leads
                        .iter()
                        .zip(v)
                        .fold(ExponentVector::zero(leads[0].len()), |acc, (a, &k)| {
                            acc.add(&a.scale(k))
                        })
                })
                .collect::<BTreeSet<_>>()
                .len() as u64
        })
        .collect()
}

/// `dim K[F]_t` as the rank of the coefficient matrix of all products.
fn subalgebra_counts_by_products(gens: &[Polynomial], degrees: &[u32], bound: u32) -> Vec<u64> {
    (1..=bound)
        .map(|t| {
            let products: Vec<Polynomial> = common::compositions(degrees, t)
                .iter()
                .map(|v| common::product(gens, v))
                .collect();
            let columns: BTreeMap<ExponentVector, usize> = products
                .iter()
                .flat_map(|p| p.support())
                .collect::<BTreeSet<_>>()
                .into_iter()
                .enumerate()
                .map(|(i, e)| (e, i))
                .collect();
            let rows: Vec<Vec<Rational>> = products
                .iter()
                .map(|p| {
                    let mut row = vec![Rational::zero(); columns.len()];
                    for (e, c) in p.terms() {
                        row[columns[e]] = c.clone();
                    }
                    row
                })
                .collect();
            common::rank(rows) as u64
        })
        .collect()
}

fn degrees_of(gens: &[Polynomial]) -> Vec<u32> {
    let grading = detect_grading(gens).unwrap();
    gens.iter()
        .map(|f| f.homogeneous_degree(&grading).unwrap() as u32)
        .collect()
}

#[test]
fn hilbert_counts_match_their_definitions() {
    let mut rng = common::rng(32);
    for _ in 0..40 {
        let gens = random_generators(&mut rng, true);
        let degrees = degrees_of(&gens);
        let grading = detect_grading(&gens).unwrap();
        assert_eq!(
            subalgebra_hilbert_counts(&gens, &grading, 5),
            subalgebra_counts_by_products(&gens, &degrees, 5)
        );
        for cls in extract_weight_vectors(&gens).unwrap() {
            let leads = cls.tuple.choices();
            assert_eq!(
                monoid_hilbert_counts(leads, &degrees, 6),
                monoid_counts_by_listing(leads, &degrees, 6)
            );
            assert_eq!(
                hilbert_vector(&gens, &cls, 6).unwrap().values,
                monoid_hilbert_counts(leads, &degrees, 6)
            );
        }
    }
}

fn failure_degree(gens: &[Polynomial], cls: &OrderClass) -> Option<u32> {
    let fail = sagbi_failure(gens, cls).unwrap()?;
    let degrees = degrees_of(gens);
    Some(
        fail.relation
            .u
            .iter()
            .zip(&degrees)
            .map(|(k, d)| k * d)
            .sum(),
    )
}

#[test]
fn subduction_and_hilbert_criteria_agree() {
    let mut rng = common::rng(33);
    let (mut yes, mut no) = (0, 0);
    for _ in 0..60 {
        let gens = random_generators(&mut rng, true);
        for cls in extract_weight_vectors(&gens).unwrap() {
            let by_subduction = is_sagbi_subduction(&gens, &cls).unwrap();
            let bound = failure_degree(&gens, &cls).unwrap_or(8);
            let by_hilbert = is_sagbi_hilbert(&gens, &cls, Some(bound)).unwrap();
            assert_eq!(
                by_subduction, by_hilbert.is_basis,
                "gens {gens:?} class {cls:?}"
            );
            if by_subduction {
                yes += 1;
            } else {
                no += 1;
                assert!(by_hilbert.first_mismatch.unwrap() <= bound);
            }
        }
    }
    assert!(yes > 10 && no > 10, "unbalanced sample: {yes} vs {no}");
}

#[test]
fn detection_is_a_subset_of_enumeration() {
    let mut rng = common::rng(34);
    for _ in 0..40 {
        let gens = random_generators(&mut rng, false);
        let all = extract_weight_vectors(&gens).unwrap();
        let detected = weight_vectors_realizing_sagbi(&gens, SagbiMethod::Subduction).unwrap();
        assert!(detected.iter().all(|c| all.contains(c)));
    }
}

fn recertified(
    gens: &[Polynomial],
    classes: &[OrderClass],
    rng: &mut ChaCha8Rng,
) -> Vec<OrderClass> {
    let nvars = gens[0].ring().nvars();
    classes
        .iter()
        .map(|c| {
            let objective: Vec<i64> = (0..nvars).map(|_| rng.gen_range(-2..=2)).collect();
            let weight = cone_feasibility_with_objective(gens, &c.tuple, &objective).unwrap();
            assert_eq!(
                leading_tuple(gens, &sagbi_gb::TermOrder::from_weight(&weight)).unwrap(),
                c.tuple
            );
            OrderClass {
                tuple: c.tuple.clone(),
                weight,
            }
        })
        .collect()
}

#[test]
fn rankings_depend_only_on_leading_tuples() {
    let mut rng = common::rng(35);
    for _ in 0..30 {
        let gens = random_generators(&mut rng, true);
        let classes = extract_weight_vectors(&gens).unwrap();
        let other = recertified(&gens, &classes, &mut rng);
        for criterion in [RankCriterion::Nicer, RankCriterion::Preferable] {
            let a = rank_classes(&gens, classes.clone(), criterion, 6).unwrap();
            let b = rank_classes(&gens, other.clone(), criterion, 6).unwrap();
            let tuples = |groups: &[sagbi_gb::sagbi::RankedGroup]| {
                groups
                    .iter()
                    .map(|g| {
                        (
                            g.key.clone(),
                            g.classes
                                .iter()
                                .map(|c| c.tuple.clone())
                                .collect::<Vec<_>>(),
                        )
                    })
                    .collect::<Vec<_>>()
            };
            assert_eq!(tuples(&a), tuples(&b));
        }
    }
}

#[test]
fn sagbi_classes_rank_first_under_preferable() {
    let mut rng = common::rng(36);
    let mut seen = 0;
    for _ in 0..60 {
        let gens = random_generators(&mut rng, true);
        let detected = weight_vectors_realizing_sagbi(&gens, SagbiMethod::Subduction).unwrap();
        if detected.is_empty() {
            continue;
        }
        seen += 1;
        let groups = rank_classes(
            &gens,
            extract_weight_vectors(&gens).unwrap(),
            RankCriterion::Preferable,
            6,
        )
        .unwrap();
        for cls in &detected {
            assert!(groups[0].classes.contains(cls));
        }
    }
    assert!(seen > 10);
}
