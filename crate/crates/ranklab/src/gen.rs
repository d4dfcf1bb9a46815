//! Deterministic instance generation.
//!
//! All randomness flows through [`SeedPath`], a splittable seed derivation: a path of
//! labels hashes to the seed of an independent stream cipher RNG, so generation for
//! one catalog entry, dimension, or trial never depends on evaluation order. Equal
//! seeds and paths give byte-equal instances.

use crate::geninv::{moore_penrose, one_inverse_with, GenInverseClass, GenInverseSample};
use crate::matrix::{
    solve_matrix_system, system_satisfied, LinearTerm, Matrix, MatrixEquation, SystemSolution,
};
use crate::scalar::{rat, ExactScalar, FieldSpec, Rat};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Errors from generators whose hypotheses the caller must meet.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GenError {
    #[error("derivation hypothesis not met: {0}")]
    Hypothesis(&'static str),
    #[error("no solution satisfies the requested equation system")]
    Unsolvable,
}

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Hierarchical seed: hash of the root seed and every label on the path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeedPath(u64);

impl SeedPath {
    pub fn root(seed: u64) -> Self {
        SeedPath(splitmix(seed ^ FNV_OFFSET))
    }

    pub fn child(&self, label: &str) -> Self {
        let mut h = self.0 ^ FNV_OFFSET;
        for b in label.bytes() {
            h = (h ^ u64::from(b)).wrapping_mul(FNV_PRIME);
        }
        SeedPath(splitmix(h))
    }

    pub fn child_index(&self, idx: u64) -> Self {
        let mut h = self.0 ^ FNV_OFFSET;
        for b in idx.to_le_bytes() {
            h = (h ^ u64::from(b)).wrapping_mul(FNV_PRIME);
        }
        SeedPath(splitmix(h))
    }

    /// Independent RNG for this path.
    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }

    /// Stable value for replay payloads in reports.
    pub fn key(&self) -> u64 {
        self.0
    }
}

/// Gaussian integer with both components in `[-bound, bound]`.
pub fn random_gaussian_scalar(bound: i64, field: FieldSpec, rng: &mut ChaCha8Rng) -> ExactScalar {
    let re = rng.gen_range(-bound..=bound);
    let im = rng.gen_range(-bound..=bound);
    ExactScalar::gaussian(re, im, field)
}

/// Matrix of Gaussian integers with components in `[-bound, bound]`.
pub fn random_matrix(
    rows: usize,
    cols: usize,
    bound: i64,
    field: FieldSpec,
    rng: &mut ChaCha8Rng,
) -> Matrix {
    let mut entries = Vec::with_capacity(rows * cols);
    for _ in 0..rows * cols {
        entries.push(random_gaussian_scalar(bound, field, rng));
    }
    Matrix::new(rows, cols, entries, field).expect("entries built in the field")
}

const REJECTION_CAP: usize = 64;
const DEFAULT_BOUND: i64 = 3;

/// Random nonsingular matrix by rejection over small Gaussian integers; after 64
/// rejections the entry bound widens, which keeps termination certain without
/// changing the typical draw.
pub fn random_nonsingular(m: usize, field: FieldSpec, rng: &mut ChaCha8Rng) -> Matrix {
    let mut bound = DEFAULT_BOUND;
    let mut tries = 0;
    loop {
        let cand = random_matrix(m, m, bound, field, rng);
        if cand.rank() == m {
            return cand;
        }
        tries += 1;
        if tries % REJECTION_CAP == 0 {
            bound += 1;
        }
    }
}

/// Random matrix with full column rank `k <= m`.
pub fn random_full_column_rank(
    m: usize,
    k: usize,
    field: FieldSpec,
    rng: &mut ChaCha8Rng,
) -> Matrix {
    assert!(k <= m, "column rank bounded by row count");
    let mut bound = DEFAULT_BOUND;
    let mut tries = 0;
    loop {
        let cand = random_matrix(m, k, bound, field, rng);
        if cand.rank() == k {
            return cand;
        }
        tries += 1;
        if tries % REJECTION_CAP == 0 {
            bound += 1;
        }
    }
}

/// Random `rows x cols` matrix of exact rank `r`, as a full-column-rank times
/// full-row-rank product.
pub fn random_matrix_with_rank(
    rows: usize,
    cols: usize,
    r: usize,
    field: FieldSpec,
    rng: &mut ChaCha8Rng,
) -> Matrix {
    assert!(r <= rows.min(cols), "rank bounded by both dimensions");
    if r == 0 {
        return Matrix::zeros(rows, cols, field);
    }
    let left = random_full_column_rank(rows, r, field, rng);
    let right = random_full_column_rank(cols, r, field, rng).conj_transpose();
    left.mul(&right).expect("conformable")
}

/// Random idempotent of exact rank `k`: a conjugated 0/1 diagonal.
pub fn random_idempotent(m: usize, k: usize, field: FieldSpec, rng: &mut ChaCha8Rng) -> Matrix {
    assert!(k <= m, "idempotent rank bounded by order");
    let p = random_nonsingular(m, field, rng);
    let p_inv = p.inverse().expect("nonsingular by construction");
    let mut diag = Matrix::zeros(m, m, field);
    let core = Matrix::from_fn(m, m, field, |i, j| {
        if i == j && i < k {
            ExactScalar::one(field)
        } else {
            ExactScalar::zero(field)
        }
    });
    diag = diag.add(&core).expect("same shape");
    let out = p.mul(&diag).and_then(|x| x.mul(&p_inv)).expect("conformable");
    debug_assert!(out.is_idempotent());
    debug_assert_eq!(out.rank(), k);
    out
}

/// Random orthogonal projector of rank `k`: `B (B* B)^-1 B*` over a full-column-rank
/// `B`.
pub fn random_projector(m: usize, k: usize, field: FieldSpec, rng: &mut ChaCha8Rng) -> Matrix {
    assert!(k <= m, "projector rank bounded by order");
    if k == 0 {
        return Matrix::zeros(m, m, field);
    }
    let b = random_full_column_rank(m, k, field, rng);
    let bs = b.conj_transpose();
    let gram_inv = bs.mul(&b).and_then(|g| g.inverse()).expect("Gram matrix of full-rank B");
    let out = b.mul(&gram_inv).and_then(|x| x.mul(&bs)).expect("conformable");
    debug_assert!(out.is_idempotent() && out.is_hermitian());
    out
}

/// Idempotents conjugated from 0/1 diagonals by one shared basis, so all outputs
/// commute pairwise. `patterns[t][i]` decides whether member `t` fixes basis
/// direction `i`.
pub fn commuting_idempotents(
    m: usize,
    patterns: &[Vec<bool>],
    field: FieldSpec,
    rng: &mut ChaCha8Rng,
) -> Vec<Matrix> {
    let p = random_nonsingular(m, field, rng);
    let p_inv = p.inverse().expect("nonsingular by construction");
    patterns
        .iter()
        .map(|pat| {
            assert_eq!(pat.len(), m, "pattern length equals order");
            let diag = Matrix::from_fn(m, m, field, |i, j| {
                if i == j && pat[i] {
                    ExactScalar::one(field)
                } else {
                    ExactScalar::zero(field)
                }
            });
            p.mul(&diag).and_then(|x| x.mul(&p_inv)).expect("conformable")
        })
        .collect()
}

/// Random boolean pattern for [`commuting_idempotents`].
pub fn random_pattern(m: usize, rng: &mut ChaCha8Rng) -> Vec<bool> {
    (0..m).map(|_| rng.gen_bool(0.5)).collect()
}

/// Patterns with pairwise disjoint support, giving mutually annihilating
/// idempotents (`A_s A_t = 0` for `s != t`).
pub fn disjoint_patterns(m: usize, members: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<bool>> {
    let mut patterns = vec![vec![false; m]; members];
    for i in 0..m {
        // Slot `members` leaves direction i unowned.
        let slot = rng.gen_range(0..=members);
        if slot < members {
            patterns[slot][i] = true;
        }
    }
    patterns
}

/// Rules that turn matrices with special squares into idempotents, plus the
/// pseudoinverse sandwich constructions that are idempotent unconditionally.
pub enum DerivedRule {
    /// `A^2 = -A` gives `-A`.
    NegatedSquare,
    /// `A^2 = I` gives `(I + A)/2`.
    InvolutionPlus,
    /// `A^2 = I` gives `(I - A)/2`.
    InvolutionMinus,
    /// `A^2 = -I` gives `(I + iA)/2`.
    SkewInvolution,
    /// With companion `B`: `B (A B)† A`.
    SandwichPinv(Matrix),
    /// With companions `B, C`: `B C (A B C)† A`.
    TripleLeft(Matrix, Matrix),
    /// With companions `B, C`: `C (A B C)† A B`.
    TripleRight(Matrix, Matrix),
}

/// Applies a [`DerivedRule`] to `a`, checking the rule's hypothesis first and the
/// idempotency of the result always.
pub fn derived_idempotent(a: &Matrix, rule: &DerivedRule) -> Result<Matrix, GenError> {
    let field = a.field();
    let out = match rule {
        DerivedRule::NegatedSquare => {
            let sq = a.mul(a).expect("square");
            if sq != a.neg() {
                return Err(GenError::Hypothesis("A^2 = -A"));
            }
            a.neg()
        }
        DerivedRule::InvolutionPlus | DerivedRule::InvolutionMinus => {
            let sq = a.mul(a).expect("square");
            if !sq.is_identity() {
                return Err(GenError::Hypothesis("A^2 = I"));
            }
            let id = Matrix::identity(a.rows(), field);
            let sum = match rule {
                DerivedRule::InvolutionPlus => &id + a,
                _ => &id - a,
            };
            crate::geninv::scale_rat(&sum, 1, 2)
        }
        DerivedRule::SkewInvolution => {
            let sq = a.mul(a).expect("square");
            if sq != Matrix::identity(a.rows(), field).neg() {
                return Err(GenError::Hypothesis("A^2 = -I"));
            }
            let ia = a.scale(&ExactScalar::i(field)).expect("same field");
            crate::geninv::scale_rat(&(&Matrix::identity(a.rows(), field) + &ia), 1, 2)
        }
        DerivedRule::SandwichPinv(b) => {
            let ab = a.mul(b).expect("A B conformable");
            let pinv = moore_penrose(&ab);
            b.mul(&pinv).and_then(|x| x.mul(a)).expect("conformable")
        }
        DerivedRule::TripleLeft(b, c) => {
            let abc = a.mul(b).and_then(|x| x.mul(c)).expect("A B C conformable");
            let pinv = moore_penrose(&abc);
            b.mul(c)
                .and_then(|bc| bc.mul(&pinv))
                .and_then(|x| x.mul(a))
                .expect("conformable")
        }
        DerivedRule::TripleRight(b, c) => {
            let abc = a.mul(b).and_then(|x| x.mul(c)).expect("A B C conformable");
            let pinv = moore_penrose(&abc);
            c.mul(&pinv)
                .and_then(|x| x.mul(a))
                .and_then(|x| x.mul(b))
                .expect("conformable")
        }
    };
    if !out.is_idempotent() {
        return Err(GenError::Hypothesis("derived matrix failed its idempotency check"));
    }
    Ok(out)
}

/// Draws `A† + F_A U + V E_A` with `U, V` Gaussian-integer matrices bounded by 2;
/// the `{1,3}` and `{1,4}` classes zero `V` and `U` respectively.
pub fn sample_gen_inverse(
    a: &Matrix,
    class: GenInverseClass,
    rng: &mut ChaCha8Rng,
) -> GenInverseSample {
    let field = a.field();
    let (n, m) = (a.cols(), a.rows());
    let mut u = random_matrix(n, m, 2, field, rng);
    let mut v = random_matrix(n, m, 2, field, rng);
    match class {
        GenInverseClass::One => {}
        GenInverseClass::OneThree => v = Matrix::zeros(n, m, field),
        GenInverseClass::OneFour => u = Matrix::zeros(n, m, field),
    }
    let pinv = moore_penrose(a);
    let inverse = one_inverse_with(a, &pinv, &u, &v);
    GenInverseSample { inverse, u, v }
}

/// Random member of an affine solution space: particular plus a random small
/// Gaussian combination of the homogeneous basis.
pub fn sample_solution(sol: &SystemSolution, field: FieldSpec, rng: &mut ChaCha8Rng) -> Vec<Matrix> {
    let mut values = sol.particular.clone();
    for basis in &sol.homogeneous {
        let c = random_gaussian_scalar(2, field, rng);
        if c.is_zero() {
            continue;
        }
        for (acc, b) in values.iter_mut().zip(basis) {
            *acc = acc.add(&b.scale(&c).expect("same field")).expect("same shape");
        }
    }
    values
}

/// Solutions `(X, Y)` of `M X = X`, `Y M = Y`, `M Y = X M`.
pub fn sample_fixed_point_pair(
    m_mat: &Matrix,
    rng: &mut ChaCha8Rng,
) -> Result<(Matrix, Matrix), GenError> {
    let field = m_mat.field();
    let m = m_mat.rows();
    let id = Matrix::identity(m, field);
    let shifted = m_mat - &id;
    let zero = Matrix::zeros(m, m, field);
    let eqs = [
        MatrixEquation {
            terms: vec![LinearTerm { unknown: 0, left: shifted.clone(), right: id.clone() }],
            rhs: zero.clone(),
        },
        MatrixEquation {
            terms: vec![LinearTerm { unknown: 1, left: id.clone(), right: shifted.clone() }],
            rhs: zero.clone(),
        },
        MatrixEquation {
            terms: vec![
                LinearTerm { unknown: 1, left: m_mat.clone(), right: id.clone() },
                LinearTerm { unknown: 0, left: id.neg(), right: m_mat.clone() },
            ],
            rhs: zero,
        },
    ];
    let sol = solve_matrix_system(&eqs, &[(m, m), (m, m)], field)
        .map_err(|_| GenError::Unsolvable)?;
    let values = sample_solution(&sol, field, rng);
    debug_assert!(system_satisfied(&eqs, &values));
    let mut it = values.into_iter();
    Ok((it.next().expect("two unknowns"), it.next().expect("two unknowns")))
}

/// Solutions `(X, Y)` of `A X = X`, `Y B = Y`, `A Y = X B`.
pub fn sample_intertwining_pair(
    a: &Matrix,
    b: &Matrix,
    rng: &mut ChaCha8Rng,
) -> Result<(Matrix, Matrix), GenError> {
    let field = a.field();
    let m = a.rows();
    let id = Matrix::identity(m, field);
    let zero = Matrix::zeros(m, m, field);
    let eqs = [
        MatrixEquation {
            terms: vec![LinearTerm { unknown: 0, left: a - &id, right: id.clone() }],
            rhs: zero.clone(),
        },
        MatrixEquation {
            terms: vec![LinearTerm { unknown: 1, left: id.clone(), right: b - &id }],
            rhs: zero.clone(),
        },
        MatrixEquation {
            terms: vec![
                LinearTerm { unknown: 1, left: a.clone(), right: id.clone() },
                LinearTerm { unknown: 0, left: id.neg(), right: b.clone() },
            ],
            rhs: zero,
        },
    ];
    let sol = solve_matrix_system(&eqs, &[(m, m), (m, m)], field)
        .map_err(|_| GenError::Unsolvable)?;
    let values = sample_solution(&sol, field, rng);
    debug_assert!(system_satisfied(&eqs, &values));
    let mut it = values.into_iter();
    Ok((it.next().expect("two unknowns"), it.next().expect("two unknowns")))
}

/// Solutions `(X, Y)` of `A X = X`, `B Y = Y`, `R(A Y) ⊆ R(X)`, `R(B X) ⊆ R(Y)` for
/// idempotent `A, B`. Draws a power-product pair (always a solution), or a kernel
/// sample accepted only when the range conditions hold.
pub fn sample_range_chain_pair(
    a: &Matrix,
    b: &Matrix,
    rng: &mut ChaCha8Rng,
) -> (Matrix, Matrix) {
    let field = a.field();
    let m = a.rows();
    if rng.gen_bool(0.5) {
        // Kernel route: A X = X and B Y = Y are linear; the containments are
        // checked and the draw discarded on failure.
        for _ in 0..8 {
            let n = rng.gen_range(1..=m);
            let p = rng.gen_range(1..=m);
            let x = fixed_columns(a, n, rng);
            let y = fixed_columns(b, p, rng);
            let ay = a.mul(&y).expect("conformable");
            let bx = b.mul(&x).expect("conformable");
            let ok = ay.range_contained_in(&x).expect("same rows")
                && bx.range_contained_in(&y).expect("same rows");
            if ok {
                return (x, y);
            }
        }
    }
    let k = rng.gen_range(1..=3u32);
    let ab = a.mul(b).expect("conformable");
    let ba = b.mul(a).expect("conformable");
    if rng.gen_bool(0.5) {
        let x = ab.pow(k - 1).and_then(|p| p.mul(a)).expect("conformable");
        let y = ba.pow(k - 1).and_then(|p| p.mul(b)).expect("conformable");
        (x, y)
    } else {
        let _ = field;
        (ab.pow(k).expect("square"), ba.pow(k).expect("square"))
    }
}

/// Random `m x cols` matrix with `M X = X`, drawn from the kernel of `M - I`.
fn fixed_columns(m_mat: &Matrix, cols: usize, rng: &mut ChaCha8Rng) -> Matrix {
    let field = m_mat.field();
    let id = Matrix::identity(m_mat.rows(), field);
    let kernel = (m_mat - &id).kernel_basis();
    let coeff = random_matrix(kernel.cols(), cols, 2, field, rng);
    kernel.mul(&coeff).expect("conformable")
}

/// Small nonzero rational, excluding the provided values.
pub fn sample_small_rational(
    exclusions: &[Rat],
    field: FieldSpec,
    rng: &mut ChaCha8Rng,
) -> ExactScalar {
    const POOL: [(i64, i64); 16] = [
        (1, 1),
        (-1, 1),
        (2, 1),
        (-2, 1),
        (3, 1),
        (-3, 1),
        (1, 2),
        (-1, 2),
        (3, 2),
        (-3, 2),
        (1, 3),
        (-1, 3),
        (2, 3),
        (-2, 3),
        (5, 2),
        (-5, 3),
    ];
    loop {
        let (n, d) = POOL[rng.gen_range(0..POOL.len())];
        let q = rat(n, d);
        if !exclusions.contains(&q) {
            return ExactScalar::from_rat(q, field);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f0() -> FieldSpec {
        FieldSpec::RATIONAL
    }

    fn rng_for(label: &str) -> ChaCha8Rng {
        SeedPath::root(42).child(label).rng()
    }

    #[test]
    fn seed_paths_are_order_free_and_stable() {
        let root = SeedPath::root(7);
        let a = root.child("alpha").child_index(3);
        let b = root.child("alpha").child_index(3);
        assert_eq!(a, b);
        assert_ne!(a, root.child("alpha").child_index(4));
        assert_ne!(root.child("x").key(), root.child("y").key());
    }

    #[test]
    fn idempotent_generator_hits_requested_rank() {
        let mut rng = rng_for("idem");
        for m in 1..=4 {
            for k in 0..=m {
                let a = random_idempotent(m, k, f0(), &mut rng);
                assert!(a.is_idempotent());
                assert_eq!(a.rank(), k);
            }
        }
    }

    #[test]
    fn conjugated_unit_generator_matches_example() {
        // P = [[1,1],[0,1]], k = 1 gives [[1,-1],[0,0]].
        let f = f0();
        let p = Matrix::from_ints(&[&[1, 1], &[0, 1]], f);
        let diag = Matrix::from_ints(&[&[1, 0], &[0, 0]], f);
        let a = p.mul(&diag).unwrap().mul(&p.inverse().unwrap()).unwrap();
        assert_eq!(a, Matrix::from_ints(&[&[1, -1], &[0, 0]], f));
    }

    #[test]
    fn projector_generator_is_hermitian_idempotent() {
        let mut rng = rng_for("proj");
        let p = random_projector(3, 2, f0(), &mut rng);
        assert!(p.is_idempotent());
        assert!(p.is_hermitian());
        assert_eq!(p.rank(), 2);
        // The classic column example: B = (1, 1)^T projects onto its line.
        let b = Matrix::from_ints(&[&[1], &[1]], f0());
        let bs = b.conj_transpose();
        let gram_inv = bs.mul(&b).unwrap().inverse().unwrap();
        let p = b.mul(&gram_inv).unwrap().mul(&bs).unwrap();
        assert_eq!(p, crate::geninv::scale_rat(&Matrix::from_ints(&[&[1, 1], &[1, 1]], f0()), 1, 2));
    }

    #[test]
    fn commuting_family_commutes() {
        let mut rng = rng_for("commute");
        let pats = vec![random_pattern(4, &mut rng), random_pattern(4, &mut rng), random_pattern(4, &mut rng)];
        let fam = commuting_idempotents(4, &pats, f0(), &mut rng);
        for x in &fam {
            assert!(x.is_idempotent());
        }
        for x in &fam {
            for y in &fam {
                assert_eq!(x.mul(y).unwrap(), y.mul(x).unwrap());
            }
        }
    }

    #[test]
    fn disjoint_family_annihilates() {
        let mut rng = rng_for("disjoint");
        let pats = disjoint_patterns(5, 3, &mut rng);
        let fam = commuting_idempotents(5, &pats, f0(), &mut rng);
        for (i, x) in fam.iter().enumerate() {
            for (j, y) in fam.iter().enumerate() {
                if i != j {
                    assert!(x.mul(y).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn skew_involution_rule_matches_example() {
        let f = f0();
        let i = ExactScalar::i(f);
        let a = Matrix::new(2, 2, vec![i.clone(), ExactScalar::zero(f), ExactScalar::zero(f), i.neg()], f)
            .unwrap();
        let out = derived_idempotent(&a, &DerivedRule::SkewInvolution).unwrap();
        assert_eq!(out, Matrix::from_ints(&[&[0, 0], &[0, 1]], f));
        assert!(matches!(
            derived_idempotent(&Matrix::identity(2, f), &DerivedRule::SkewInvolution),
            Err(GenError::Hypothesis(_))
        ));
    }

    #[test]
    fn sandwich_rule_is_idempotent_for_arbitrary_inputs() {
        let mut rng = rng_for("sandwich");
        let a = random_matrix(2, 3, 3, f0(), &mut rng);
        let b = random_matrix(3, 2, 3, f0(), &mut rng);
        let out = derived_idempotent(&a, &DerivedRule::SandwichPinv(b)).unwrap();
        assert!(out.is_idempotent());
        let c = random_matrix(2, 2, 2, f0(), &mut rng);
        let b2 = random_matrix(3, 2, 2, f0(), &mut rng);
        for rule in [
            DerivedRule::TripleLeft(b2.clone(), c.clone()),
            DerivedRule::TripleRight(b2, c),
        ] {
            let out = derived_idempotent(&a, &rule).unwrap();
            assert!(out.is_idempotent());
        }
    }

    #[test]
    fn equation_samples_satisfy_their_systems() {
        let mut rng = rng_for("equations");
        let m_mat = random_idempotent(3, 2, f0(), &mut rng);
        let (x, y) = sample_fixed_point_pair(&m_mat, &mut rng).unwrap();
        assert_eq!(m_mat.mul(&x).unwrap(), x);
        assert_eq!(y.mul(&m_mat).unwrap(), y);
        assert_eq!(m_mat.mul(&y).unwrap(), x.mul(&m_mat).unwrap());

        let a = random_idempotent(3, 1, f0(), &mut rng);
        let b = random_idempotent(3, 2, f0(), &mut rng);
        let (x, y) = sample_intertwining_pair(&a, &b, &mut rng).unwrap();
        assert_eq!(a.mul(&x).unwrap(), x);
        assert_eq!(y.mul(&b).unwrap(), y);
        assert_eq!(a.mul(&y).unwrap(), x.mul(&b).unwrap());

        let (x, y) = sample_range_chain_pair(&a, &b, &mut rng);
        assert_eq!(a.mul(&x).unwrap(), x);
        assert_eq!(b.mul(&y).unwrap(), y);
        assert!(a.mul(&y).unwrap().range_contained_in(&x).unwrap());
        assert!(b.mul(&x).unwrap().range_contained_in(&y).unwrap());
    }

    #[test]
    fn gen_inverse_sample_classes() {
        let mut rng = rng_for("geninv");
        let a = random_matrix_with_rank(3, 4, 2, f0(), &mut rng);
        let s1 = sample_gen_inverse(&a, GenInverseClass::One, &mut rng);
        assert!(crate::geninv::satisfies_class(&a, &s1.inverse, GenInverseClass::One));
        let s13 = sample_gen_inverse(&a, GenInverseClass::OneThree, &mut rng);
        assert!(crate::geninv::satisfies_class(&a, &s13.inverse, GenInverseClass::OneThree));
        let s14 = sample_gen_inverse(&a, GenInverseClass::OneFour, &mut rng);
        assert!(crate::geninv::satisfies_class(&a, &s14.inverse, GenInverseClass::OneFour));
    }

    #[test]
    fn scalar_pool_respects_exclusions() {
        let mut rng = rng_for("scalars");
        for _ in 0..200 {
            let s = sample_small_rational(&[rat(1, 1), rat(-1, 1)], f0(), &mut rng);
            assert!(!s.is_zero());
            assert!(s.is_rational());
            let (re, _, _, _) = s.components();
            assert_ne!(re, &rat(1, 1));
            assert_ne!(re, &rat(-1, 1));
        }
    }
}
