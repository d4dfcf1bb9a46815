//! Property tests: field axioms, serialization round-trips, rank invariances,
//! cross-consistency of paired catalog formulas, and registry coherence.

use proptest::prelude::*;

use ranklab::catalog::{all_entries, annotated_ids};
use ranklab::gen::{random_idempotent, random_matrix, random_matrix_with_rank, random_nonsingular, SeedPath};
use ranklab::matrix::Matrix;
use ranklab::scalar::{rat, ExactScalar, FieldSpec};

use rand::Rng;

fn field(which: usize) -> FieldSpec {
    match which {
        0 => FieldSpec::RATIONAL,
        1 => FieldSpec::new(5).unwrap(),
        _ => FieldSpec::new(13).unwrap(),
    }
}

fn scalar_in(which: usize) -> impl Strategy<Value = ExactScalar> {
    let f = field(which);
    let q = || (-30i64..30, 1i64..12).prop_map(|(n, d)| rat(n, d));
    (q(), q(), q(), q()).prop_map(move |(are, aim, bre, bim)| {
        if f.has_root() {
            ExactScalar::from_components(are, aim, bre, bim, f).unwrap()
        } else {
            ExactScalar::from_components(are, aim, rat(0, 1), rat(0, 1), f).unwrap()
        }
    })
}

fn axioms(x: &ExactScalar, y: &ExactScalar, z: &ExactScalar) {
    let f = x.field();
    let assoc_add = x.add(y).unwrap().add(z).unwrap();
    assert_eq!(assoc_add, x.add(&y.add(z).unwrap()).unwrap());
    let assoc_mul = x.mul(y).unwrap().mul(z).unwrap();
    assert_eq!(assoc_mul, x.mul(&y.mul(z).unwrap()).unwrap());
    assert_eq!(x.add(y).unwrap(), y.add(x).unwrap());
    assert_eq!(x.mul(y).unwrap(), y.mul(x).unwrap());
    let distributed = x.mul(&y.add(z).unwrap()).unwrap();
    assert_eq!(distributed, x.mul(y).unwrap().add(&x.mul(z).unwrap()).unwrap());
    assert_eq!(x.conj().mul(&y.conj()).unwrap(), x.mul(y).unwrap().conj());
    if !x.is_zero() {
        assert_eq!(x.mul(&x.inv().unwrap()).unwrap(), ExactScalar::one(f));
    }
    assert_eq!(x.add(&x.neg()).unwrap(), ExactScalar::zero(f));
}

macro_rules! field_axiom_tests {
    ($($name:ident: $which:expr,)*) => {$(
        proptest! {
            #![proptest_config(ProptestConfig::with_cases(1000))]
            #[test]
            fn $name(
                x in scalar_in($which),
                y in scalar_in($which),
                z in scalar_in($which),
            ) {
                axioms(&x, &y, &z);
            }
        }
    )*};
}

field_axiom_tests! {
    field_axioms_hold_over_the_rationals: 0,
    field_axioms_hold_over_root_five: 1,
    field_axioms_hold_over_root_thirteen: 2,
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(600))]
    #[test]
    fn scalar_text_form_round_trips(x in (0usize..3).prop_flat_map(scalar_in)) {
        // Parsing is field-directed, so re-parse in the scalar's own field.
        let text = x.to_string();
        let back = ExactScalar::parse(&text, x.field()).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn wide_rationals_round_trip(n in -1_000_000i64..1_000_000, d in 1i64..10_000) {
        let x = ExactScalar::from_rat(rat(n, d), FieldSpec::RATIONAL);
        prop_assert_eq!(ExactScalar::parse(&x.to_string(), FieldSpec::RATIONAL).unwrap(), x);
    }
}

#[test]
fn rank_is_stable_under_star_and_nonsingular_sandwiches() {
    let mut rng = SeedPath::root(201).rng();
    for trial in 0..500 {
        let f = field(trial % 3);
        let m = rng.gen_range(1..=6);
        let n = rng.gen_range(1..=6);
        // Alternate generic draws with engineered rank-deficient ones.
        let a = if trial % 2 == 0 {
            random_matrix(m, n, 3, f, &mut rng)
        } else {
            random_matrix_with_rank(m, n, rng.gen_range(0..=m.min(n)), f, &mut rng)
        };
        let r = a.rank();
        assert_eq!(r, a.rank_naive(), "trial {trial}: elimination routes disagree");
        assert_eq!(r, a.conj_transpose().rank(), "trial {trial}: star changed the rank");
        let p = random_nonsingular(m, f, &mut rng);
        let q = random_nonsingular(n, f, &mut rng);
        let sandwiched = p.mul(&a).unwrap().mul(&q).unwrap();
        assert_eq!(r, sandwiched.rank(), "trial {trial}: nonsingular sandwich moved the rank");
        assert_eq!(
            sandwiched.rank(),
            sandwiched.rank_naive(),
            "trial {trial}: routes disagree after sandwich"
        );

        let kernel = a.kernel_basis();
        assert_eq!(kernel.cols(), n - r, "trial {trial}: kernel dimension off");
        assert!(a.mul(&kernel).unwrap().is_zero(), "trial {trial}: kernel not annihilated");

        let b = random_matrix(m, rng.gen_range(1..=6), 3, f, &mut rng);
        let joint = Matrix::hconcat(&[&a, &b]).unwrap();
        assert!(joint.rank() <= r + b.rank(), "trial {trial}: subadditivity broken");
    }
}

/// The same difference-of-products rank is computed two ways in the catalog:
/// once over the stacked/concatenated powers and once over the inputs after
/// substituting the four power expansions. Both must give the same number on
/// shared instances.
#[test]
fn power_difference_expansions_cross_agree() {
    let mut rng = SeedPath::root(202).rng();
    for trial in 0..45 {
        let f = field(trial % 3);
        let m = rng.gen_range(2..=5);
        let a = random_idempotent(m, rng.gen_range(0..=m), f, &mut rng);
        let b = random_idempotent(m, rng.gen_range(0..=m), f, &mut rng);
        let row_ab = Matrix::hconcat(&[&a, &b]).unwrap().rank() as i64;
        let col_ab = Matrix::vconcat(&[&a, &b]).unwrap().rank() as i64;
        let (ra, rb) = (a.rank() as i64, b.rank() as i64);
        for k in 1..=3u32 {
            let abk = a.mul(&b).unwrap().pow(k).unwrap();
            let bak = b.mul(&a).unwrap().pow(k).unwrap();
            let direct = (&abk - &bak).rank() as i64;
            let via_blocks = Matrix::vconcat(&[&abk, &bak]).unwrap().rank() as i64
                + Matrix::hconcat(&[&abk, &bak]).unwrap().rank() as i64
                - abk.rank() as i64
                - bak.rank() as i64;
            let via_inputs =
                col_ab + row_ab + abk.rank() as i64 + bak.rank() as i64 - 2 * ra - 2 * rb;
            assert_eq!(direct, via_blocks, "trial {trial} k {k}: block expansion");
            assert_eq!(direct, via_inputs, "trial {trial} k {k}: substituted expansion");

            let aba = abk.mul(&a).unwrap();
            let bab = bak.mul(&b).unwrap();
            let tailed = (&aba - &bab).rank() as i64;
            let tailed_blocks = Matrix::vconcat(&[&aba, &bab]).unwrap().rank() as i64
                + Matrix::hconcat(&[&aba, &bab]).unwrap().rank() as i64
                - aba.rank() as i64
                - bab.rank() as i64;
            let tailed_inputs =
                col_ab + row_ab + aba.rank() as i64 + bab.rank() as i64 - 2 * ra - 2 * rb;
            assert_eq!(tailed, tailed_blocks, "trial {trial} k {k}: tailed block expansion");
            assert_eq!(tailed, tailed_inputs, "trial {trial} k {k}: tailed substitution");
        }
    }
}

/// Subspace verdicts are basis-free: conjugating every input by one shared
/// nonsingular matrix maps each word's range through the same bijection, so
/// every containment among the words keeps its truth value.
#[test]
fn range_verdicts_survive_a_change_of_basis() {
    let mut rng = SeedPath::root(203).rng();
    for trial in 0..40 {
        let f = field(trial % 3);
        let m = rng.gen_range(2..=4);
        let a = random_idempotent(m, rng.gen_range(0..=m), f, &mut rng);
        let b = random_idempotent(m, rng.gen_range(0..=m), f, &mut rng);
        let p = random_nonsingular(m, f, &mut rng);
        let pinv = p.inverse().unwrap();
        let conj = |x: &Matrix| p.mul(x).unwrap().mul(&pinv).unwrap();

        let words = |a: &Matrix, b: &Matrix| -> Vec<Matrix> {
            let ab = a.mul(b).unwrap();
            let ba = b.mul(a).unwrap();
            vec![
                &ab - &ba,
                a - b,
                &(a + b) - &Matrix::identity(m, f),
                ab,
            ]
        };
        let plain = words(&a, &b);
        let moved = words(&conj(&a), &conj(&b));
        for i in 0..plain.len() {
            for j in 0..plain.len() {
                assert_eq!(
                    plain[i].range_contained_in(&plain[j]).unwrap(),
                    moved[i].range_contained_in(&moved[j]).unwrap(),
                    "trial {trial}: containment {i} in {j} flipped under conjugation"
                );
                assert_eq!(
                    plain[i].range_intersection_dim(&plain[j]).unwrap(),
                    moved[i].range_intersection_dim(&moved[j]).unwrap(),
                    "trial {trial}: intersection dimension {i}, {j} moved"
                );
                assert_eq!(
                    plain[i].nullspace_contained_in(&plain[j]).unwrap(),
                    moved[i].nullspace_contained_in(&moved[j]).unwrap(),
                    "trial {trial}: kernel containment {i} in {j} flipped"
                );
            }
        }
    }
}

#[test]
fn registry_is_coherent() {
    let entries = all_entries();
    let mut seen = std::collections::HashSet::new();
    for e in entries {
        assert!(seen.insert(e.id), "duplicate catalog id {}", e.id);
        assert!(!e.summary.is_empty(), "{} has an empty summary", e.id);
        if e.literal.is_some() {
            assert!(
                e.note.is_some(),
                "{} carries a literal reading but no annotation explaining it",
                e.id
            );
        }
        if let Some(note) = e.note {
            assert!(!note.is_empty(), "{} has an empty annotation", e.id);
        }
    }
    let annotated = annotated_ids();
    assert!(!annotated.is_empty(), "the discrepancy list must be non-empty");
    for id in &annotated {
        assert!(seen.contains(id), "annotated id {id} is not registered");
    }
    // The k-indexed splits exist for exactly k = 0..=6.
    for base in ["3112k", "th313dk"] {
        for k in 0..=6 {
            let id = format!("{base}{k}");
            assert!(seen.contains(id.as_str()), "{id} missing");
        }
        assert!(!seen.contains(format!("{base}7").as_str()), "{base}7 must not exist");
    }
}
