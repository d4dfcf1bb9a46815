//! Moore-Penrose transfers for a pair of orthogonal projectors — where every
//! Drazin identity of the idempotent catalog specializes because the blocks
//! are Hermitian — together with the range and null-space lattice identities
//! for the commutator and its relatives, which need only idempotency.

use super::basics::ri;
use super::*;
use crate::geninv::moore_penrose;

fn mp(x: &Matrix) -> Matrix {
    moore_penrose(x)
}

/// These null-space lines are printed with intersections, copying the shape of
/// the range identities; A = B already refutes that reading, since the left
/// kernel is everything while N(A + B - I) is trivial. Conjugate-transposing
/// the range identities turns meets into sums, which is what we check.
const TK311_NOTE: &str = "the printed intersections contradict A = B, where the \
left side is the whole space; the conjugate-transpose dual of the range \
identities replaces meets with sums of null spaces";

fn pair_parts(inst: &Instance) -> (&Matrix, &Matrix, Matrix, Matrix) {
    let (a, b) = inst.pair();
    let id = eye(a.rows(), a.field());
    let n = &(a + b) - &id;
    (a, b, id, n)
}

fn powm(x: &Matrix, e: u32) -> Matrix {
    x.pow(e).expect("square")
}

fn w48(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let comm = &a.mul(b).expect("square") - &b.mul(a).expect("square");
    let dd = mp(&(a - b));
    let nd = mp(&n);
    check_mat_chain(&[
        ("(AB - BA)+", &mp(&comm)),
        ("-(A - B)+ (A + B - I)+", &dd.mul(&nd).expect("square").neg()),
        ("(A + B - I)+ (A - B)+", &nd.mul(&dd).expect("square")),
    ])
}

fn w49(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let cross = &a.mul(b).expect("square") + &b.mul(a).expect("square");
    let sd = mp(&(a + b));
    let nd = mp(&n);
    check_mat_chain(&[
        ("(AB + BA)+", &mp(&cross)),
        ("(A + B)+ (A + B - I)+", &sd.mul(&nd).expect("square")),
        ("(A + B - I)+ (A + B)+", &nd.mul(&sd).expect("square")),
    ])
}

fn w51(inst: &Instance, p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let k = p.k;
    let ab = a.mul(b).expect("square");
    let ba = b.mul(a).expect("square");
    let dd = mp(&(a - b));
    let ndodd = powm(&mp(&n), 2 * k - 1);
    check_mat_chain(&[
        ("((AB)^k - (BA)^k)+", &mp(&(&powm(&ab, k) - &powm(&ba, k)))),
        ("-(A - B)+ (N+)^(2k-1)", &dd.mul(&ndodd).expect("square").neg()),
        ("(N+)^(2k-1) (A - B)+", &ndodd.mul(&dd).expect("square")),
    ])
}

fn w51_literal(inst: &Instance, p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let k = p.k;
    let ab = a.mul(b).expect("square");
    let ba = b.mul(a).expect("square");
    let dd = mp(&(a - b));
    let ndodd = powm(&mp(&n), 2 * k - 1);
    check_mat_chain(&[
        ("((AB)^k - (BA)^k)+", &mp(&(&powm(&ab, k) - &powm(&ba, k)))),
        ("(A - B)+ (N+)^(2k-1)", &dd.mul(&ndodd).expect("square")),
        ("-(N+)^(2k-1) (A - B)+", &ndodd.mul(&dd).expect("square").neg()),
    ])
}

fn w53(inst: &Instance, p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let k = p.k;
    let ab = a.mul(b).expect("square");
    let ba = b.mul(a).expect("square");
    let sd = mp(&(a + b));
    let ndodd = powm(&mp(&n), 2 * k - 1);
    check_mat_chain(&[
        ("((AB)^k + (BA)^k)+", &mp(&(&powm(&ab, k) + &powm(&ba, k)))),
        ("(A + B)+ (N+)^(2k-1)", &sd.mul(&ndodd).expect("square")),
        ("(N+)^(2k-1) (A + B)+", &ndodd.mul(&sd).expect("square")),
    ])
}

fn w55(inst: &Instance, p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let k = p.k;
    let aba = a.mul(b).and_then(|t| t.mul(a)).expect("square");
    let bab = b.mul(a).and_then(|t| t.mul(b)).expect("square");
    let dd = mp(&(a - b));
    let ndeven = powm(&mp(&n), 2 * k);
    check_mat_chain(&[
        ("((ABA)^k - (BAB)^k)+", &mp(&(&powm(&aba, k) - &powm(&bab, k)))),
        ("(A - B)+ (N+)^2k", &dd.mul(&ndeven).expect("square")),
        ("(N+)^2k (A - B)+", &ndeven.mul(&dd).expect("square")),
    ])
}

fn w57(inst: &Instance, p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let k = p.k;
    let aba = a.mul(b).and_then(|t| t.mul(a)).expect("square");
    let bab = b.mul(a).and_then(|t| t.mul(b)).expect("square");
    let sd = mp(&(a + b));
    let ndeven = powm(&mp(&n), 2 * k);
    check_mat_chain(&[
        ("((ABA)^k + (BAB)^k)+", &mp(&(&powm(&aba, k) + &powm(&bab, k)))),
        ("(A + B)+ (N+)^2k", &sd.mul(&ndeven).expect("square")),
        ("(N+)^2k (A + B)+", &ndeven.mul(&sd).expect("square")),
    ])
}

fn w57_literal(inst: &Instance, p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let k = p.k;
    let aba = a.mul(b).and_then(|t| t.mul(a)).expect("square");
    let bab = b.mul(a).and_then(|t| t.mul(b)).expect("square");
    let sd = mp(&(a + b));
    let ndeven = powm(&mp(&n), 2 * k);
    check_mat_chain(&[
        ("((ABA)^k - (BAB)^k)+", &mp(&(&powm(&aba, k) - &powm(&bab, k)))),
        ("(A + B)+ (N+)^2k", &sd.mul(&ndeven).expect("square")),
        ("(N+)^2k (A + B)+", &ndeven.mul(&sd).expect("square")),
    ])
}

fn w58(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, _, _) = pair_parts(inst);
    let aba = a.mul(b).and_then(|t| t.mul(a)).expect("square");
    let dd2 = {
        let d = mp(&(a - b));
        d.mul(&d).expect("square")
    };
    check_mat_chain(&[
        ("(A - ABA)+", &mp(&(a - &aba))),
        ("A ((A - B)+)^2", &a.mul(&dd2).expect("square")),
        ("((A - B)+)^2 A", &dd2.mul(a).expect("square")),
    ])
}

fn w59(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, _, _) = pair_parts(inst);
    let bab = b.mul(a).and_then(|t| t.mul(b)).expect("square");
    let dd2 = {
        let d = mp(&(a - b));
        d.mul(&d).expect("square")
    };
    check_mat_chain(&[
        ("(B - BAB)+", &mp(&(b - &bab))),
        ("B ((A - B)+)^2", &b.mul(&dd2).expect("square")),
        ("((A - B)+)^2 B", &dd2.mul(b).expect("square")),
    ])
}

fn w60(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let aba = a.mul(b).and_then(|t| t.mul(a)).expect("square");
    let nd2 = {
        let nd = mp(&n);
        nd.mul(&nd).expect("square")
    };
    check_mat_chain(&[
        ("(ABA)+", &mp(&aba)),
        ("A ((A + B - I)+)^2", &a.mul(&nd2).expect("square")),
        ("((A + B - I)+)^2 A", &nd2.mul(a).expect("square")),
    ])
}

fn w61(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let bab = b.mul(a).and_then(|t| t.mul(b)).expect("square");
    let nd2 = {
        let nd = mp(&n);
        nd.mul(&nd).expect("square")
    };
    check_mat_chain(&[
        ("(BAB)+", &mp(&bab)),
        ("B ((A + B - I)+)^2", &b.mul(&nd2).expect("square")),
        ("((A + B - I)+)^2 B", &nd2.mul(b).expect("square")),
    ])
}

fn ctmp1(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, id, _) = pair_parts(inst);
    let ab = a.mul(b).expect("square");
    let ba = b.mul(a).expect("square");
    let inner = (&id - b).mul(&(&id - a)).expect("square");
    let correction = b.mul(&mp(&inner)).and_then(|t| t.mul(a)).expect("square");
    check_mat_chain(&[("(AB)+", &mp(&ab)), ("BA - B ((I - B)(I - A))+ A", &(&ba - &correction))])
}

fn ctmp2(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, _, _) = pair_parts(inst);
    let ab = a.mul(b).expect("square");
    check_mat_chain(&[
        ("(A - B)+", &mp(&(a - b))),
        ("(A - AB)+ - (B - AB)+", &(&mp(&(a - &ab)) - &mp(&(b - &ab)))),
    ])
}

fn ctmp3(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, _, _) = pair_parts(inst);
    let ba = b.mul(a).expect("square");
    let left = b.mul(&mp(&(a - &ba))).expect("square");
    let right = mp(&(b - &ba)).mul(a).expect("square");
    check_mat_chain(&[
        ("(A - B)+", &mp(&(a - b))),
        ("A - B + B (A - BA)+ - (B - BA)+ A", &(&(&(a - b) + &left) - &right)),
    ])
}

fn ctmp4(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, id, n) = pair_parts(inst);
    let ab = a.mul(b).expect("square");
    let inner = (&id - a).mul(&(&id - b)).expect("square");
    check_mat_chain(&[
        ("(A + B - I)+", &mp(&n)),
        ("(AB)+ - ((I - A)(I - B))+", &(&mp(&ab) - &mp(&inner))),
    ])
}

fn w62r(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, id, _) = pair_parts(inst);
    let m = a.rows() as i64;
    check_eq_all(&[
        ("r([A + B, I + A - B])", ri(&row(&[&(a + b), &(&(&id + a) - b)]))),
        ("r([A + B, I - A + B])", ri(&row(&[&(a + b), &(&(&id - a) + b)]))),
        ("r([A - B, I + A + B])", ri(&row(&[&(a - b), &(&id + &(a + b))]))),
        ("r([A - B, I - A - B])", ri(&row(&[&(a - b), &(&id - &(a + b))]))),
        ("m", m),
    ])
}

/// The two paired rank conditions that decide commutation, in both printed
/// orders.
fn commutation_rank_clauses(a: &Matrix, b: &Matrix) -> (bool, bool) {
    let ab = a.mul(b).expect("square");
    let ba = b.mul(a).expect("square");
    let stacked = ri(&col(&[a, b]));
    let joined = ri(&row(&[a, b]));
    let sum = ri(a) + ri(b);
    let first = stacked == sum - ri(&ab) && joined == sum - ri(&ba);
    let second = stacked == sum - ri(&ba) && joined == sum - ri(&ab);
    (first, second)
}

fn w62h(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, id, _) = pair_parts(inst);
    let flipped = &id - &(a + b);
    let (first, second) = commutation_rank_clauses(a, b);
    check_iff(&[
        (
            "r([A - B, I - A - B]) = r(A - B) + r(I - A - B)",
            ri(&row(&[&(a - b), &flipped])) == ri(&(a - b)) + ri(&flipped),
        ),
        ("r([A; B]) = r(A) + r(B) - r(AB) and r([A, B]) = r(A) + r(B) - r(BA)", first),
        ("r([A; B]) = r(A) + r(B) - r(BA) and r([A, B]) = r(A) + r(B) - r(AB)", second),
    ])
}

fn w62h_literal(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, id, _) = pair_parts(inst);
    let flipped = &id - &(a + b);
    let (first, second) = commutation_rank_clauses(a, b);
    check_iff(&[
        (
            "r([A - B, I - A - B]) = r(A + B) + r(I - A - B)",
            ri(&row(&[&(a - b), &flipped])) == ri(&(a + b)) + ri(&flipped),
        ),
        ("r([A; B]) = r(A) + r(B) - r(AB) and r([A, B]) = r(A) + r(B) - r(BA)", first),
        ("r([A; B]) = r(A) + r(B) - r(BA) and r([A, B]) = r(A) + r(B) - r(AB)", second),
    ])
}

fn w62(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, id, _) = pair_parts(inst);
    let comm = &a.mul(b).expect("square") - &b.mul(a).expect("square");
    check_range_intersection("R(AB - BA)", &comm, &(a - b), &(&id - &(a + b)))
}

fn w62i(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, id, _) = pair_parts(inst);
    let m = a.rows();
    let comm = &a.mul(b).expect("square") - &b.mul(a).expect("square");
    check_implies(
        ("A - B nonsingular", (a - b).rank() == m),
        (
            "R(AB - BA) = R(I - A - B)",
            bool_of(comm.range_equal(&(&id - &(a + b)))),
        ),
    )
}

fn w62ii(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let m = a.rows();
    let comm = &a.mul(b).expect("square") - &b.mul(a).expect("square");
    check_implies(
        ("A + B - I nonsingular", n.rank() == m),
        ("R(AB - BA) = R(A - B)", bool_of(comm.range_equal(&(a - b)))),
    )
}

fn w62iii(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, id, _) = pair_parts(inst);
    let m = a.rows();
    let comm = &a.mul(b).expect("square") - &b.mul(a).expect("square");
    check_iff(&[
        ("AB - BA nonsingular", comm.rank() == m),
        (
            "A - B and I - A - B both nonsingular",
            (a - b).rank() == m && (&id - &(a + b)).rank() == m,
        ),
    ])
}

fn w62iv(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, id, _) = pair_parts(inst);
    let ab = a.mul(b).expect("square");
    let ba = b.mul(a).expect("square");
    let (first, second) = commutation_rank_clauses(a, b);
    check_iff(&[
        ("AB = BA", ab == ba),
        (
            "R(A - B) meet R(I - A - B) = 0",
            (a - b)
                .range_intersection_dim(&(&id - &(a + b)))
                .expect("same rows")
                == 0,
        ),
        ("r([A; B]) = r(A) + r(B) - r(AB) and r([A, B]) = r(A) + r(B) - r(BA)", first),
        ("r([A; B]) = r(A) + r(B) - r(BA) and r([A, B]) = r(A) + r(B) - r(AB)", second),
    ])
}

fn w63(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let cross = &a.mul(b).expect("square") + &b.mul(a).expect("square");
    check_range_intersection("R(AB + BA)", &cross, &(a + b), &n)
}

fn w64(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let lhs = &a.mul(b).and_then(|t| t.mul(a)).expect("square")
        + &b.mul(a).and_then(|t| t.mul(b)).expect("square");
    check_range_intersection("R(ABA + BAB)", &lhs, &(a + b), &n.mul(&n).expect("square"))
}

fn w65(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let lhs = &a.mul(b).and_then(|t| t.mul(a)).expect("square")
        - &b.mul(a).and_then(|t| t.mul(b)).expect("square");
    check_range_intersection("R(ABA - BAB)", &lhs, &(a - b), &n.mul(&n).expect("square"))
}

fn w66(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let comm = &a.mul(b).expect("square") - &b.mul(a).expect("square");
    check_range_intersection(
        "R((AB - BA)^2)",
        &comm.mul(&comm).expect("square"),
        &(a - b).mul(&(a - b)).expect("square"),
        &n.mul(&n).expect("square"),
    )
}

fn tk311p(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let cross = &a.mul(b).expect("square") + &b.mul(a).expect("square");
    check_null_sum("AB + BA", &cross, &(a + b), &n)
}

fn tk311p_literal(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let cross = &a.mul(b).expect("square") + &b.mul(a).expect("square");
    check_null_intersection("AB + BA", &cross, &(a + b), &n)
}

fn tk311m(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let comm = &a.mul(b).expect("square") - &b.mul(a).expect("square");
    check_null_sum("AB - BA", &comm, &(a - b), &n)
}

fn tk311m_literal(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let comm = &a.mul(b).expect("square") - &b.mul(a).expect("square");
    check_null_intersection("AB - BA", &comm, &(a - b), &n)
}

fn tk311p3(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let lhs = &a.mul(b).and_then(|t| t.mul(a)).expect("square")
        + &b.mul(a).and_then(|t| t.mul(b)).expect("square");
    check_null_sum("ABA + BAB", &lhs, &(a + b), &n.mul(&n).expect("square"))
}

fn tk311p3_literal(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let lhs = &a.mul(b).and_then(|t| t.mul(a)).expect("square")
        + &b.mul(a).and_then(|t| t.mul(b)).expect("square");
    check_null_intersection("ABA + BAB", &lhs, &(a + b), &n.mul(&n).expect("square"))
}

fn tk311m3(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let lhs = &a.mul(b).and_then(|t| t.mul(a)).expect("square")
        - &b.mul(a).and_then(|t| t.mul(b)).expect("square");
    check_null_sum("ABA - BAB", &lhs, &(a - b), &n.mul(&n).expect("square"))
}

fn tk311m3_literal(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let lhs = &a.mul(b).and_then(|t| t.mul(a)).expect("square")
        - &b.mul(a).and_then(|t| t.mul(b)).expect("square");
    check_null_intersection("ABA - BAB", &lhs, &(a - b), &n.mul(&n).expect("square"))
}

fn tk311sq(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let comm = &a.mul(b).expect("square") - &b.mul(a).expect("square");
    check_null_sum(
        "(AB - BA)^2",
        &comm.mul(&comm).expect("square"),
        &(a - b).mul(&(a - b)).expect("square"),
        &n.mul(&n).expect("square"),
    )
}

fn tk311sq_literal(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let comm = &a.mul(b).expect("square") - &b.mul(a).expect("square");
    check_null_intersection(
        "(AB - BA)^2",
        &comm.mul(&comm).expect("square"),
        &(a - b).mul(&(a - b)).expect("square"),
        &n.mul(&n).expect("square"),
    )
}

pub(super) fn entries() -> Vec<Entry> {
    use CheckerKind::*;
    use InputClass::{IdempotentPair, ProjectorPair};
    vec![
        Entry::new("w48", MatrixIdentity, ProjectorPair,
            "(AB - BA)+ = -(A - B)+ N+ = N+ (A - B)+", w48),
        Entry::new("w49", MatrixIdentity, ProjectorPair,
            "(AB + BA)+ = (A + B)+ N+ = N+ (A + B)+", w49),
        Entry::new("w51", MatrixIdentity, ProjectorPair,
            "((AB)^k - (BA)^k)+ = -(A - B)+ (N+)^(2k-1) = (N+)^(2k-1) (A - B)+", w51)
            .swept()
            .noted("the printed signs contradict the unpowered commutator line two \
                    displays up; the minus belongs on the (A - B)+-first product")
            .with_literal(w51_literal),
        Entry::new("w53", MatrixIdentity, ProjectorPair,
            "((AB)^k + (BA)^k)+ = (A + B)+ (N+)^(2k-1) = (N+)^(2k-1) (A + B)+", w53)
            .swept(),
        Entry::new("w55", MatrixIdentity, ProjectorPair,
            "((ABA)^k - (BAB)^k)+ = (A - B)+ (N+)^2k = (N+)^2k (A - B)+", w55)
            .swept(),
        Entry::new("w57", MatrixIdentity, ProjectorPair,
            "((ABA)^k + (BAB)^k)+ = (A + B)+ (N+)^2k = (N+)^2k (A + B)+", w57)
            .swept()
            .noted("the left side is printed with a minus, duplicating the line above \
                    it; the (A + B)+ factors identify this as the sum case")
            .with_literal(w57_literal),
        Entry::new("w58", MatrixIdentity, ProjectorPair,
            "(A - ABA)+ = A ((A - B)+)^2 = ((A - B)+)^2 A", w58),
        Entry::new("w59", MatrixIdentity, ProjectorPair,
            "(B - BAB)+ = B ((A - B)+)^2 = ((A - B)+)^2 B", w59),
        Entry::new("w60", MatrixIdentity, ProjectorPair,
            "(ABA)+ = A (N+)^2 = (N+)^2 A", w60),
        Entry::new("w61", MatrixIdentity, ProjectorPair,
            "(BAB)+ = B (N+)^2 = (N+)^2 B", w61),
        Entry::new("ctmp1", MatrixIdentity, ProjectorPair,
            "(AB)+ = BA - B ((I - B)(I - A))+ A", ctmp1),
        Entry::new("ctmp2", MatrixIdentity, ProjectorPair,
            "(A - B)+ = (A - AB)+ - (B - AB)+", ctmp2),
        Entry::new("ctmp3", MatrixIdentity, ProjectorPair,
            "(A - B)+ = A - B + B (A - BA)+ - (B - BA)+ A", ctmp3),
        Entry::new("ctmp4", MatrixIdentity, ProjectorPair,
            "(A + B - I)+ = (AB)+ - ((I - A)(I - B))+", ctmp4),
        Entry::new("w62r", RankEquality, IdempotentPair,
            "the four mixed-shift block rows [A +- B, I +- A +- B] all have full rank",
            w62r),
        Entry::new("w62h", FactEquivalence, IdempotentPair,
            "additivity of r([A - B, I - A - B]) is the commutation rank condition in \
             both product orders",
            w62h)
            .noted("the right side of the first clause is printed as r(A + B) + \
                    r(I - A - B), which A = B = I already refutes; checked with r(A - B)")
            .with_literal(w62h_literal),
        Entry::new("w62", SubspaceIdentity, IdempotentPair,
            "R(AB - BA) = R(A - B) meet R(I - A - B)", w62),
        Entry::new("w62i", FactEquivalence, IdempotentPair,
            "A - B nonsingular forces R(AB - BA) = R(I - A - B)", w62i),
        Entry::new("w62ii", FactEquivalence, IdempotentPair,
            "A + B - I nonsingular forces R(AB - BA) = R(A - B)", w62ii),
        Entry::new("w62iii", FactEquivalence, IdempotentPair,
            "AB - BA is nonsingular iff A - B and I - A - B both are", w62iii),
        Entry::new("w62iv", FactEquivalence, IdempotentPair,
            "AB = BA iff the ranges of A - B and I - A - B meet trivially iff the \
             commutation rank condition holds in either product order",
            w62iv),
        Entry::new("w63", SubspaceIdentity, IdempotentPair,
            "R(AB + BA) = R(A + B) meet R(A + B - I)", w63),
        Entry::new("w64", SubspaceIdentity, IdempotentPair,
            "R(ABA + BAB) = R(A + B) meet R((A + B - I)^2)", w64),
        Entry::new("w65", SubspaceIdentity, IdempotentPair,
            "R(ABA - BAB) = R(A - B) meet R((A + B - I)^2)", w65),
        Entry::new("w66", SubspaceIdentity, IdempotentPair,
            "R((AB - BA)^2) = R((A - B)^2) meet R((A + B - I)^2)", w66),
        Entry::new("tk311p", SubspaceIdentity, IdempotentPair,
            "N(AB + BA) = N(A + B) + N(A + B - I)", tk311p)
            .noted(TK311_NOTE)
            .with_literal(tk311p_literal),
        Entry::new("tk311m", SubspaceIdentity, IdempotentPair,
            "N(AB - BA) = N(A - B) + N(A + B - I)", tk311m)
            .noted(TK311_NOTE)
            .with_literal(tk311m_literal),
        Entry::new("tk311p3", SubspaceIdentity, IdempotentPair,
            "N(ABA + BAB) = N(A + B) + N((A + B - I)^2)", tk311p3)
            .noted(TK311_NOTE)
            .with_literal(tk311p3_literal),
        Entry::new("tk311m3", SubspaceIdentity, IdempotentPair,
            "N(ABA - BAB) = N(A - B) + N((A + B - I)^2)", tk311m3)
            .noted(TK311_NOTE)
            .with_literal(tk311m3_literal),
        Entry::new("tk311sq", SubspaceIdentity, IdempotentPair,
            "N((AB - BA)^2) = N((A - B)^2) + N((A + B - I)^2)", tk311sq)
            .noted(TK311_NOTE)
            .with_literal(tk311sq_literal),
    ]
}
