//! Independent oracles for the derived quantities: every check here recomputes
//! its target through a different route than the library takes, so agreement is
//! evidence rather than tautology.

use ranklab::extremal::{certify, sum_pp_bounds, CertMode, Pencil};
use ranklab::gen::{random_matrix, random_matrix_with_rank, sample_solution, SeedPath};
use ranklab::geninv::{drazin, drazin_at, matrix_index, moore_penrose, scale_rat};
use ranklab::matrix::{solve_matrix_system, LinearTerm, Matrix, MatrixEquation};
use ranklab::scalar::{ExactScalar, FieldSpec};

use rand::Rng;

fn fields() -> Vec<FieldSpec> {
    vec![
        FieldSpec::RATIONAL,
        FieldSpec::new(5).unwrap(),
        FieldSpec::new(13).unwrap(),
    ]
}

/// The pseudoinverse by a route that never factors `A`: any solution `W` of the
/// linear system `W(A*AA*) = A*` yields `WA* = A†`. (Left-multiplying
/// `XAA* = A*` by `(A†)*` pins `XA = A†A`; then
/// `WA* = W(A*AA†) = (XA)A† = A†`.)
fn mp_by_linear_system(a: &Matrix, rng: &mut rand_chacha::ChaCha8Rng) -> (Matrix, Matrix) {
    let f = a.field();
    let n = a.cols();
    let astar = a.conj_transpose();
    let chain = astar.mul(a).unwrap().mul(&astar).unwrap();
    let eq = MatrixEquation {
        terms: vec![LinearTerm { unknown: 0, left: Matrix::identity(n, f), right: chain }],
        rhs: astar.clone(),
    };
    let sol = solve_matrix_system(&[eq], &[(n, n)], f).expect("W(A*AA*) = A* is consistent");
    let particular = sol.particular[0].mul(&astar).unwrap();
    let sampled = sample_solution(&sol, f, rng)[0].mul(&astar).unwrap();
    (particular, sampled)
}

#[test]
fn moore_penrose_agrees_with_the_linear_system_route() {
    let mut rng = SeedPath::root(101).rng();
    for field in fields() {
        for _ in 0..20 {
            let m = rng.gen_range(1..=5);
            let n = rng.gen_range(1..=5);
            let r = rng.gen_range(0..=m.min(n));
            let a = random_matrix_with_rank(m, n, r, field, &mut rng);
            let direct = moore_penrose(&a);
            let (particular, sampled) = mp_by_linear_system(&a, &mut rng);
            assert_eq!(direct, particular, "factored and solved routes disagree");
            assert_eq!(direct, sampled, "pseudoinverse not unique across the solution space");
        }
    }
}

#[test]
fn intersection_dimension_agrees_with_the_kernel_construction() {
    let f = FieldSpec::RATIONAL;
    // dim(R[e1, e2] meet R[e2, e3]) = 1 in dimension three.
    let m3 = Matrix::from_ints(&[&[1, 0], &[0, 1], &[0, 0]], f);
    let n3 = Matrix::from_ints(&[&[0, 0], &[1, 0], &[0, 1]], f);
    assert_eq!(m3.range_intersection_dim(&n3).unwrap(), 1);

    let mut rng = SeedPath::root(102).rng();
    for trial in 0..200 {
        let field = fields()[trial % 3];
        let rows = rng.gen_range(1..=5);
        let m = random_matrix(rows, rng.gen_range(1..=5), 2, field, &mut rng);
        let n = random_matrix(rows, rng.gen_range(1..=5), 2, field, &mut rng);
        // Constructive route, assembled from primitives: each kernel vector
        // (x; y) of [M, -N] certifies M x = N y, a point of both ranges, and
        // those points span the whole intersection.
        let joint = Matrix::hconcat(&[&m, &n.neg()]).unwrap();
        let x_part = joint.kernel_basis().top_rows(m.cols());
        let constructed = m.mul(&x_part).unwrap();
        let dim = m.range_intersection_dim(&n).unwrap();
        assert_eq!(constructed.rank(), dim, "trial {trial}: constructed basis rank differs");
        assert!(
            constructed.range_contained_in(&m).unwrap()
                && constructed.range_contained_in(&n).unwrap(),
            "trial {trial}: constructed columns escape an operand's range"
        );
        assert_eq!(
            m.range_intersection_basis(&n).unwrap().rank(),
            dim,
            "trial {trial}: library basis rank differs"
        );
        assert!(rows >= dim, "intersection cannot exceed the ambient dimension");
    }
}

#[test]
fn brute_force_parameter_grid_confirms_projector_sum_endpoints() {
    let f = FieldSpec::RATIONAL;
    let e1 = Matrix::from_ints(&[&[1], &[0]], f);
    let e2 = Matrix::from_ints(&[&[0], &[1]], f);
    let pool: Vec<ExactScalar> = [(0, 0), (1, 0), (-1, 0), (2, 0), (-2, 0), (0, 1)]
        .iter()
        .map(|&(re, im)| ExactScalar::gaussian(re, im, f))
        .collect();

    let mut rng = SeedPath::root(103).rng();
    let mut instances = vec![(e1.clone(), e2.clone())];
    for _ in 0..3 {
        let a = loop {
            let c = random_matrix(2, 1, 2, f, &mut rng);
            if !c.is_zero() {
                break c;
            }
        };
        let b = loop {
            let c = random_matrix(2, 1, 2, f, &mut rng);
            if !c.is_zero() {
                break c;
            }
        };
        instances.push((a, b));
    }

    for (which, (a, b)) in instances.into_iter().enumerate() {
        let pencil = Pencil::SumPP { a: a.clone(), b: b.clone() };
        let prep = pencil.prepare();
        let shapes = prep.param_shapes();
        let entries: usize = shapes.iter().map(|&(p, q)| p * q).sum();
        assert!(entries <= 4, "tiny instances keep the grid enumerable");
        for (ln, ld) in [(0i64, 1i64), (-1, 1), (-2, 1), (3, 1)] {
            let lambda = ExactScalar::from_rat(ranklab::scalar::rat(ln, ld), f);
            let predicted = sum_pp_bounds(&lambda, &a, &b);
            let mut seen_min = usize::MAX;
            let mut seen_max = 0usize;
            for point in 0..pool.len().pow(entries as u32) {
                let mut digits = point;
                let mut params = Vec::with_capacity(shapes.len());
                for &(p, q) in &shapes {
                    let block = Matrix::from_fn(p, q, f, |_, _| {
                        let v = pool[digits % pool.len()].clone();
                        digits /= pool.len();
                        v
                    });
                    params.push(block);
                }
                let rank = prep.assemble(&lambda, &params).rank();
                assert!(
                    predicted.min <= rank && rank <= predicted.max,
                    "instance {which} lambda {ln}/{ld}: grid rank {rank} escapes \
                     [{}, {}]",
                    predicted.min,
                    predicted.max
                );
                seen_min = seen_min.min(rank);
                seen_max = seen_max.max(rank);
            }
            assert_eq!(seen_max, predicted.max, "instance {which} lambda {ln}/{ld}: max unmet");
            // Minimum witnesses generally live outside any fixed grid (they
            // solve polynomial conditions in the entries); the textbook
            // instance at lambda = 0 is the one place both endpoints are
            // promised to small parameters.
            if which == 0 && ln == 0 {
                assert_eq!(seen_min, predicted.min, "textbook instance: min unmet");
            }
        }
    }

    // The certifier's verdict on the textbook instance: at lambda = 0 the
    // closed form gives [max{1,1}, r[e1, e2]] = [1, 2] and the maximum shows
    // up among the draws.
    let pencil = Pencil::SumPP { a: e1, b: e2 };
    let zero = ExactScalar::zero(f);
    let cert = certify(&pencil, &zero, 16, CertMode::Shared, &SeedPath::root(104));
    assert_eq!((cert.bounds.min, cert.bounds.max), (1, 2));
    assert!(cert.violation.is_none());
    assert!(cert.max_attained);
}

#[test]
fn drazin_inverse_is_stable_above_the_index() {
    let mut rng = SeedPath::root(105).rng();
    for field in fields() {
        for _ in 0..15 {
            let m = rng.gen_range(1..=5);
            let a = random_matrix(m, m, 2, field, &mut rng);
            let t = matrix_index(&a).unwrap() as u32;
            let base = drazin(&a).unwrap();
            for extra in 1..=2 {
                assert_eq!(
                    base,
                    drazin_at(&a, t + extra).unwrap(),
                    "recomputation at l = index + {extra} moved the Drazin inverse"
                );
            }
        }
    }
}

#[test]
fn textbook_idempotent_constructions_are_idempotent() {
    let mut rng = SeedPath::root(106).rng();
    for field in fields() {
        for _ in 0..10 {
            let m = rng.gen_range(1..=4);
            let n = rng.gen_range(1..=4);

            // The weighted least-squares hat matrix X(X*VX)†X*V, for arbitrary
            // V and X of any rank.
            let x = random_matrix_with_rank(m, n, rng.gen_range(0..=m.min(n)), field, &mut rng);
            let v = random_matrix(m, m, 2, field, &mut rng);
            let xsv = x.conj_transpose().mul(&v).unwrap();
            let hat = x
                .mul(&moore_penrose(&xsv.mul(&x).unwrap()))
                .unwrap()
                .mul(&xsv)
                .unwrap();
            assert!(hat.is_idempotent(), "hat matrix failed idempotency");

            // B(AB)†A and its three-factor relatives.
            let a = random_matrix(rng.gen_range(1..=4), m, 2, field, &mut rng);
            let b = random_matrix(m, rng.gen_range(1..=4), 2, field, &mut rng);
            let c = random_matrix(b.cols(), rng.gen_range(1..=4), 2, field, &mut rng);
            let ab = a.mul(&b).unwrap();
            assert!(b.mul(&moore_penrose(&ab)).unwrap().mul(&a).unwrap().is_idempotent());
            let abc = a.mul(&b).unwrap().mul(&c).unwrap();
            let bc = b.mul(&c).unwrap();
            assert!(bc.mul(&moore_penrose(&abc)).unwrap().mul(&a).unwrap().is_idempotent());
            assert!(c
                .mul(&moore_penrose(&abc))
                .unwrap()
                .mul(&ab)
                .unwrap()
                .is_idempotent());

            // Involutions fold into idempotents: (I ± S)/2 for S² = I, built
            // from a projector by S = 2P - I.
            let p = ranklab::gen::random_projector(3, rng.gen_range(0..=3), field, &mut rng);
            let s = &scale_rat(&p, 2, 1) - &Matrix::identity(3, field);
            assert!(s.mul(&s).unwrap().is_identity());
            let id = Matrix::identity(3, field);
            assert!(scale_rat(&(&id + &s), 1, 2).is_idempotent());
            assert!(scale_rat(&(&id - &s), 1, 2).is_idempotent());
        }
    }
}
