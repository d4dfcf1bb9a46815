//! The star twins: every pair statement specialized to `B = A*`, which is
//! again idempotent. Most checks are the pair checkers rerun on `(A, A*)`
//! instances; the entries here add only what the specialization changes —
//! collapsed rank clauses (conjugate transposition preserves rank), unsquared
//! pencil factors (now Hermitian), and the block row `[A, A*]`.

use super::basics::ri;
use super::{identities, triples};
use super::*;
use crate::geninv::scale_rat;

fn sq(x: &Matrix) -> Matrix {
    x.mul(x).expect("square")
}

/// Shared parts of a star pair: `A`, `A*`, `I`, and `N = A + A* - I`.
fn star_parts(inst: &Instance) -> (&Matrix, &Matrix, Matrix, Matrix) {
    let (a, s) = inst.pair();
    let id = eye(a.rows(), a.field());
    let n = &(a + s) - &id;
    (a, s, id, n)
}

fn tl31r1(inst: &Instance, _p: &Params) -> Outcome {
    let (a, s, id, _) = star_parts(inst);
    let m = a.rows() as i64;
    check_eq_all(&[
        ("r(A - A*)", ri(&(a - s))),
        (
            "r(A + A*) + r(2I - A - A*) - m",
            ri(&(a + s)) + ri(&(&scale_rat(&id, 2, 1) - &(a + s))) - m,
        ),
    ])
}

fn tl31r2(inst: &Instance, _p: &Params) -> Outcome {
    let (a, s, id, n) = star_parts(inst);
    let m = a.rows() as i64;
    check_eq_all(&[
        ("r(I - A - A*)", ri(&n)),
        ("2r(I + A - A*) - m", 2 * ri(&(&(&id + a) - s)) - m),
    ])
}

fn tl31r3(inst: &Instance, _p: &Params) -> Outcome {
    let (a, s, id, _) = star_parts(inst);
    let m = a.rows() as i64;
    let cross = &a.mul(s).expect("square") + &s.mul(a).expect("square");
    check_eq_all(&[
        ("r(AA* + A*A)", ri(&cross)),
        ("r([A, A*])", ri(&row(&[a, s]))),
        ("r(I - A - A*) + r(A + A*) - m", ri(&(&id - &(a + s))) + ri(&(a + s)) - m),
    ])
}

fn tl_f1(inst: &Instance, _p: &Params) -> Outcome {
    let (a, s, id, _) = star_parts(inst);
    let m = a.rows() as i64;
    check_iff(&[
        ("A = A*", a == s),
        ("(I - A - A*)^2 = I", sq(&(&id - &(a + s))) == id),
        (
            "r(A + A*) + r(2I - A - A*) = m",
            ri(&(a + s)) + ri(&(&scale_rat(&id, 2, 1) - &(a + s))) == m,
        ),
    ])
}

fn tl_vv319(inst: &Instance, _p: &Params) -> Outcome {
    let (a, s, id, n) = star_parts(inst);
    let m = a.rows() as i64;
    check_iff(&[
        ("r(I - A - A*) = m", ri(&n) == m),
        ("r(I + A - A*) = m", ri(&(&(&id + a) - s)) == m),
    ])
}

fn tl_vv320(inst: &Instance, _p: &Params) -> Outcome {
    let (a, s, id, _) = star_parts(inst);
    let m = a.rows() as i64;
    let cross = &a.mul(s).expect("square") + &s.mul(a).expect("square");
    check_iff(&[
        (
            "r(AA* + A*A) = r([A, A*]) = m",
            ri(&cross) == m && ri(&row(&[a, s])) == m,
        ),
        (
            "r(A + A*) = r(I - A - A*) = m",
            ri(&(a + s)) == m && ri(&(&id - &(a + s))) == m,
        ),
    ])
}

/// Both signs of `R(AA* (+/-) A*A) = R(A (+/-) A*) meet R(A + A* - I)`.
fn tl319e(inst: &Instance, _p: &Params) -> Outcome {
    let (a, s, _, n) = star_parts(inst);
    let front = a.mul(s).expect("square");
    let back = s.mul(a).expect("square");
    match check_range_intersection("R(AA* + A*A)", &(&front + &back), &(a + s), &n) {
        Outcome::Pass => {
            check_range_intersection("R(AA* - A*A)", &(&front - &back), &(a - s), &n)
        }
        other => other,
    }
}

/// Both signs of `R(AA*A (+/-) A*AA*) = R(A (+/-) A*) meet R(A + A* - I)`;
/// the pencil factor carries no square because it is Hermitian here.
fn tl319f(inst: &Instance, _p: &Params) -> Outcome {
    let (a, s, _, n) = star_parts(inst);
    let front = a.mul(s).and_then(|t| t.mul(a)).expect("square");
    let back = s.mul(a).and_then(|t| t.mul(s)).expect("square");
    match check_range_intersection("R(AA*A + A*AA*)", &(&front + &back), &(a + s), &n) {
        Outcome::Pass => {
            check_range_intersection("R(AA*A - A*AA*)", &(&front - &back), &(a - s), &n)
        }
        other => other,
    }
}

fn tl319g(inst: &Instance, _p: &Params) -> Outcome {
    let (a, s, _, n) = star_parts(inst);
    let front = a.mul(s).expect("square");
    let back = s.mul(a).expect("square");
    match check_null_sum("AA* + A*A", &(&front + &back), &(a + s), &n) {
        Outcome::Pass => check_null_sum("AA* - A*A", &(&front - &back), &(a - s), &n),
        other => other,
    }
}

fn tl319g_literal(inst: &Instance, _p: &Params) -> Outcome {
    let (a, s, _, n) = star_parts(inst);
    let front = a.mul(s).expect("square");
    let back = s.mul(a).expect("square");
    match check_null_intersection("AA* + A*A", &(&front + &back), &(a + s), &n) {
        Outcome::Pass => {
            check_null_intersection("AA* - A*A", &(&front - &back), &(a - s), &n)
        }
        other => other,
    }
}

fn tl319h(inst: &Instance, _p: &Params) -> Outcome {
    let (a, s, _, n) = star_parts(inst);
    let front = a.mul(s).and_then(|t| t.mul(a)).expect("square");
    let back = s.mul(a).and_then(|t| t.mul(s)).expect("square");
    match check_null_sum("AA*A + A*AA*", &(&front + &back), &(a + s), &n) {
        Outcome::Pass => check_null_sum("AA*A - A*AA*", &(&front - &back), &(a - s), &n),
        other => other,
    }
}

fn tl319h_literal(inst: &Instance, _p: &Params) -> Outcome {
    let (a, s, _, n) = star_parts(inst);
    let front = a.mul(s).and_then(|t| t.mul(a)).expect("square");
    let back = s.mul(a).and_then(|t| t.mul(s)).expect("square");
    match check_null_intersection("AA*A + A*AA*", &(&front + &back), &(a + s), &n) {
        Outcome::Pass => {
            check_null_intersection("AA*A - A*AA*", &(&front - &back), &(a - s), &n)
        }
        other => other,
    }
}

const STAR_MEET_NOTE: &str = "the printed intersections fail at any Hermitian \
idempotent, where the left kernel is everything; as in the pair case, the \
conjugate-transpose dual of the range identities replaces meets with sums";

pub(super) fn entries() -> Vec<Entry> {
    use CheckerKind::*;
    use InputClass::StarPair;
    vec![
        Entry::new("tl_v31", MatrixIdentity, StarPair,
            "(A - A*)^2 + (A + A* - I)^2 = I", identities::v31),
        Entry::new("tl_v32", MatrixIdentity, StarPair,
            "AA* + A*A + I/4 = (A + A* - I/2)^2", identities::v32),
        Entry::new("tl31r1", RankEquality, StarPair,
            "r(A - A*) = r(A + A*) + r(2I - A - A*) - m", tl31r1),
        Entry::new("tl31r2", RankEquality, StarPair,
            "r(I - A - A*) = 2r(I + A - A*) - m", tl31r2),
        Entry::new("tl31r3", RankEquality, StarPair,
            "r(AA* + A*A) = r([A, A*]) = r(I - A - A*) + r(A + A*) - m", tl31r3),
        Entry::new("tl31r4", RankEquality, StarPair,
            "r(I - AA* - A*A) splits at the golden shifts of A + A*", identities::v36)
            .radicand(5),
        Entry::new("tl31r5", RankEquality, StarPair,
            "r(2I - AA* - A*A) = r(I + A + A*) + r(2I - A - A*) - m", identities::v37),
        Entry::new("tl_f1", FactEquivalence, StarPair,
            "A = A* iff (I - A - A*)^2 = I iff r(A + A*) + r(2I - A - A*) = m", tl_f1),
        Entry::new("tl_v39", FactEquivalence, StarPair,
            "(A - A*)^2 = I/2 iff (I - A - A*)^2 = I/2", identities::v39),
        Entry::new("tl_v310", FactEquivalence, StarPair,
            "(A - A*)^2 = I iff (I - A - A*)^2 = 0 iff r(I + A - A*) + r(I - A + A*) = m",
            identities::v310)
            .noted("the final clause is printed as a bare difference with no equation; \
                    checked as r(I + A - A*) + r(I - A + A*) = m"),
        Entry::new("tl_v311", FactEquivalence, StarPair,
            "AA* + A*A = -2I iff (A + A* - I/2)^2 = -7/4 I", identities::v311),
        Entry::new("tl_v312", FactEquivalence, StarPair,
            "AA* + A*A = -I iff (A + A* - I/2)^2 = -3/4 I", identities::v312),
        Entry::new("tl_v313", FactEquivalence, StarPair,
            "AA* + A*A = -I/4 iff (A + A* - I/2)^2 = 0", identities::v313),
        Entry::new("tl_v314", FactEquivalence, StarPair,
            "AA* + A*A = 0 iff (A + A* - I/2)^2 = I/4 iff r(I - A - A*) + r(A + A*) = m",
            identities::v314),
        Entry::new("tl_v315", FactEquivalence, StarPair,
            "AA* + A*A = 3/4 I iff (A + A* - I/2)^2 = I", identities::v315),
        Entry::new("tl_v316", FactEquivalence, StarPair,
            "AA* + A*A = I iff (A + A* - I/2)^2 = 5/4 I iff the golden shifts sum to m",
            identities::v316)
            .radicand(5),
        Entry::new("tl_v317", FactEquivalence, StarPair,
            "AA* + A*A = 2I iff (A + A* - I/2)^2 = 9/4 I iff r(I + A + A*) + r(2I - A - A*) = m",
            identities::v317),
        Entry::new("tl_vv318", FactEquivalence, StarPair,
            "r(A - A*) = m iff r(A + A*) = r(2I - A - A*) = m", identities::vv318),
        Entry::new("tl_vv319", FactEquivalence, StarPair,
            "r(I - A - A*) = m iff r(I + A - A*) = m", tl_vv319),
        Entry::new("tl_vv320", FactEquivalence, StarPair,
            "r(AA* + A*A) = r([A, A*]) = m iff r(A + A*) = r(I - A - A*) = m", tl_vv320),
        Entry::new("tl_vv321", FactEquivalence, StarPair,
            "r(I - AA* - A*A) = m iff both golden shifts of A + A* have rank m",
            identities::vv321)
            .radicand(5),
        Entry::new("tl_vv322", FactEquivalence, StarPair,
            "r(2I - AA* - A*A) = m iff r(I + A + A*) = r(2I - A - A*) = m",
            identities::vv322),
        Entry::new("tl_ff31", MatrixIdentity, StarPair,
            "alpha AA* + beta A*A = (alpha A + beta A*)N = N(beta A + alpha A*)",
            identities::ff31)
            .with_scalars(TWO_SCALARS),
        Entry::new("tl_ff32", MatrixIdentity, StarPair,
            "alpha AA*A + beta A*AA* = (alpha A + beta A*)N^2 = N^2(alpha A + beta A*)",
            identities::ff32)
            .with_scalars(TWO_SCALARS)
            .noted("the right-hand factor is printed with swapped coefficients as in the \
                    general pair; N^2 commutes with A and A* separately, so the \
                    coefficients stay put")
            .with_literal(identities::ff32_literal),
        Entry::new("tl_ff33", MatrixIdentity, StarPair,
            "alpha (AA*)^k + beta (A*A)^k = (alpha A + beta A*)N^(2k-1) = N^(2k-1)(beta A + alpha A*)",
            identities::ff33)
            .swept()
            .with_scalars(TWO_SCALARS),
        Entry::new("tl_ff34", MatrixIdentity, StarPair,
            "alpha (AA*A)^k + beta (A*AA*)^k = (alpha A + beta A*)N^2k = N^2k(alpha A + beta A*)",
            identities::ff34)
            .swept()
            .with_scalars(TWO_SCALARS)
            .noted("same swapped right-hand coefficients as the k = 1 even power; \
                    corrected to the unswapped factor")
            .with_literal(identities::ff34_literal),
        Entry::new("tl_tk32ns", FactEquivalence, StarPair,
            "the four weighted star products are nonsingular exactly when alpha A + beta A* \
             and N are",
            identities::tk32ns)
            .swept()
            .with_scalars(TWO_SCALARS)
            .noted("the printed chain drops a connective and repeats a clause; read as \
                    five pairwise-equivalent nonsingularity statements"),
        Entry::new("tl_dd37", ConditionalInverseIdentity, StarPair,
            "(alpha AA* + beta A*A)^-1 = N^-1 (alpha A + beta A*)^-1 = (beta A + alpha A*)^-1 N^-1",
            identities::dd37)
            .with_scalars(TWO_SCALARS)
            .conditional(),
        Entry::new("tl_dd38", ConditionalInverseIdentity, StarPair,
            "(alpha AA*A + beta A*AA*)^-1 = N^-2 (alpha A + beta A*)^-1 = (alpha A + beta A*)^-1 N^-2",
            identities::dd38)
            .with_scalars(TWO_SCALARS)
            .conditional()
            .noted("inherits the swapped right-hand coefficients of the even-power \
                    factorization; corrected to the unswapped inverse")
            .with_literal(identities::dd38_literal),
        Entry::new("tl_dd39", ConditionalInverseIdentity, StarPair,
            "[alpha (AA*)^k + beta (A*A)^k]^-1 factors through N^(1-2k)", identities::dd39)
            .swept()
            .with_scalars(TWO_SCALARS)
            .conditional(),
        Entry::new("tl_dd310", ConditionalInverseIdentity, StarPair,
            "[alpha (AA*A)^k + beta (A*AA*)^k]^-1 factors through N^-2k", identities::dd310)
            .swept()
            .with_scalars(TWO_SCALARS)
            .conditional()
            .noted("inherits the swapped right-hand coefficients of the even-power \
                    factorization; corrected to the unswapped inverse")
            .with_literal(identities::dd310_literal),
        Entry::new("tl_w3", MatrixIdentity, StarPair,
            "AA* - A*A = (A - A*)N = -N(A - A*)", identities::w3),
        Entry::new("tl_w4", MatrixIdentity, StarPair,
            "AA* + A*A = (A + A*)N = N(A + A*)", identities::w4),
        Entry::new("tl_w14", MatrixIdentity, StarPair,
            "AA*A - A*AA* = (A - A*)N^2 = N^2(A - A*)", identities::w14),
        Entry::new("tl_w15", MatrixIdentity, StarPair,
            "AA*A + A*AA* = (A + A*)N^2 = N^2(A + A*)", identities::w15),
        Entry::new("tl_w6", MatrixIdentity, StarPair,
            "(AA* - A*A)^k carries the sign (-1)^(k(k-1)/2) on both factor orders",
            identities::w6)
            .swept(),
        Entry::new("tl_w7", MatrixIdentity, StarPair,
            "(AA* + A*A)^k = (A + A*)^k N^k = N^k (A + A*)^k", identities::w7)
            .swept(),
        Entry::new("tl_w8", MatrixIdentity, StarPair,
            "(AA*A - A*AA*)^k = (A - A*)^k N^2k = N^2k (A - A*)^k", identities::w8)
            .swept(),
        Entry::new("tl_w9", MatrixIdentity, StarPair,
            "(AA*A + A*AA*)^k = (A + A*)^k N^2k = N^2k (A + A*)^k", identities::w9)
            .swept(),
        Entry::new("tl_w10", MatrixIdentity, StarPair,
            "(AA*)^k - (A*A)^k = (A - A*)N^(2k-1) = -N^(2k-1)(A - A*)", identities::w10)
            .swept(),
        Entry::new("tl_w11", MatrixIdentity, StarPair,
            "(AA*)^k + (A*A)^k = (A + A*)N^(2k-1) = N^(2k-1)(A + A*)", identities::w11)
            .swept(),
        Entry::new("tl_w12", MatrixIdentity, StarPair,
            "(AA*A)^k - (A*AA*)^k = (A - A*)N^2k = N^2k(A - A*)", identities::w12)
            .swept(),
        Entry::new("tl_w13", MatrixIdentity, StarPair,
            "(AA*A)^k + (A*AA*)^k = (A + A*)N^2k = N^2k(A + A*)", identities::w13)
            .swept(),
        Entry::new("tl_tk33s1", MatrixIdentity, StarPair,
            "the telescoped (AA*)^j - (A*A)^j sum factors through odd powers of N",
            identities::tk33s1)
            .swept(),
        Entry::new("tl_tk33s2", MatrixIdentity, StarPair,
            "the telescoped (AA*)^j + (A*A)^j sum factors through odd powers of N",
            identities::tk33s2)
            .swept(),
        Entry::new("tl_tk33s3", MatrixIdentity, StarPair,
            "the telescoped (AA*A)^j - (A*AA*)^j sum factors through even powers of N",
            identities::tk33s3)
            .swept(),
        Entry::new("tl_tk33s4", MatrixIdentity, StarPair,
            "the telescoped (AA*A)^j + (A*AA*)^j sum factors through even powers of N",
            identities::tk33s4)
            .swept(),
        Entry::new("tl_w32", MatrixIdentity, StarPair,
            "A - AA*A = A(A - A*)^2 = (A - A*)^2 A", identities::w32),
        Entry::new("tl_w33", MatrixIdentity, StarPair,
            "A* - A*AA* = A*(A - A*)^2 = (A - A*)^2 A*", identities::w33),
        Entry::new("tl_w34", MatrixIdentity, StarPair,
            "(A - AA*A)^k = A(A - A*)^2k = (A - A*)^2k A", identities::w34)
            .swept(),
        Entry::new("tl_w35", MatrixIdentity, StarPair,
            "(A* - A*AA*)^k = A*(A - A*)^2k = (A - A*)^2k A*", identities::w35)
            .swept(),
        Entry::new("tl_w36", MatrixIdentity, StarPair,
            "AA*A = AN^2 = N^2 A", identities::w36),
        Entry::new("tl_w37", MatrixIdentity, StarPair,
            "A*AA* = A*N^2 = N^2 A*", identities::w37),
        Entry::new("tl_w38", MatrixIdentity, StarPair,
            "(AA*A)^k = AN^2k = N^2k A", identities::w38)
            .swept(),
        Entry::new("tl_w39", MatrixIdentity, StarPair,
            "(A*AA*)^k = A*N^2k = N^2k A*", identities::w39)
            .swept(),
        Entry::new("tl_w40", MatrixIdentity, StarPair,
            "(A*A)^2 = A*AN^2 = A*N^2 A", identities::w40),
        Entry::new("tl_w41", MatrixIdentity, StarPair,
            "(AA*)^2 = AA*N^2 = AN^2 A*", identities::w41),
        Entry::new("tl_w42", MatrixIdentity, StarPair,
            "(AA*)^k = A N^(2k-2) A*", identities::w42)
            .swept()
            .noted("the printed exponent k first fails at k = 3; the sandwich needs \
                    2k - 2 (equivalently 2k - 1) factors of N")
            .with_literal(identities::w42_literal),
        Entry::new("tl_w43", MatrixIdentity, StarPair,
            "(A*A)^k = A* N^(2k-2) A", identities::w43)
            .swept()
            .noted("mirror of the (AA*)^k sandwich, with the same printed exponent slip")
            .with_literal(identities::w43_literal),
        Entry::new("tl319a", SubspaceIdentity, StarPair,
            "R(AA* - A*A) lies in R(A - A*) and in R(A + A* - I)", identities::tk34a),
        Entry::new("tl319b", SubspaceIdentity, StarPair,
            "R(AA* + A*A) lies in R(A + A*) and in R(A + A* - I)", identities::tk34b),
        Entry::new("tl319c", SubspaceIdentity, StarPair,
            "N(A - A*) and N(A + A* - I) lie in N(AA* - A*A)", identities::tk34c),
        Entry::new("tl319d", SubspaceIdentity, StarPair,
            "N(A + A*) and N(A + A* - I) lie in N(AA* + A*A)", identities::tk34d),
        Entry::new("tl319e", SubspaceIdentity, StarPair,
            "R(AA* +- A*A) = R(A +- A*) meet R(A + A* - I)", tl319e),
        Entry::new("tl319f", SubspaceIdentity, StarPair,
            "R(AA*A +- A*AA*) = R(A +- A*) meet R(A + A* - I)", tl319f),
        Entry::new("tl319g", SubspaceIdentity, StarPair,
            "N(AA* +- A*A) = N(A +- A*) + N(A + A* - I)", tl319g)
            .noted(STAR_MEET_NOTE)
            .with_literal(tl319g_literal),
        Entry::new("tl319h", SubspaceIdentity, StarPair,
            "N(AA*A +- A*AA*) = N(A +- A*) + N(A + A* - I)", tl319h)
            .noted(STAR_MEET_NOTE)
            .with_literal(tl319h_literal),
        Entry::new("pp391", MatrixIdentity, StarPair,
            "I + alpha A + beta A* = (I + alpha A)(I - lambda AA*)(I + beta A*)",
            triples::th312i1)
            .with_scalars(TWO_SCALARS_UNIT_SAFE),
        Entry::new("pp392", MatrixIdentity, StarPair,
            "I + alpha A + beta A* = (I + beta A*)(I - lambda A*A)(I + alpha A)",
            triples::th312i2)
            .with_scalars(TWO_SCALARS_UNIT_SAFE),
        Entry::new("tl312ns", FactEquivalence, StarPair,
            "I - lambda AA* is nonsingular iff I + alpha A + beta A* is", triples::th312ns)
            .with_scalars(TWO_SCALARS_UNIT_SAFE)
            .noted("the second clause is printed as I - alpha A - beta A*, whose twist \
                    scalar differs; the factorization two lines up fixes the sign")
            .with_literal(triples::th312ns_literal),
        Entry::new("pp393", MatrixIdentity, StarPair,
            "(I - lambda AA*)^-1 = (I + beta A*)(I + alpha A + beta A*)^-1 (I + alpha A)",
            triples::th312inv1)
            .with_scalars(TWO_SCALARS_UNIT_SAFE)
            .conditional(),
        Entry::new("pp394", MatrixIdentity, StarPair,
            "(I - lambda A*A)^-1 = (I + alpha A)(I + alpha A + beta A*)^-1 (I + beta A*)",
            triples::th312inv2)
            .with_scalars(TWO_SCALARS_UNIT_SAFE)
            .conditional(),
    ]
}
