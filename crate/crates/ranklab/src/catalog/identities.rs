//! Identities carried by a pair of idempotents `A, B`: the complementary-square
//! pencil and the rank formulas it induces, weighted product factorizations
//! through `A + B - I`, power telescopes, Drazin inverse transfers, and the
//! sandwich formulas for `(AB)^k`, `(ABA)^k`, and `A - ABA`.

use super::basics::ri;
use super::*;
use crate::geninv::{drazin, scale_rat};

/// Shared parts of a square pair: `A`, `B`, `I`, and `N = A + B - I`.
fn pair_parts(inst: &Instance) -> (&Matrix, &Matrix, Matrix, Matrix) {
    let (a, b) = inst.pair();
    let id = eye(a.rows(), a.field());
    let n = &(a + b) - &id;
    (a, b, id, n)
}

fn sq(x: &Matrix) -> Matrix {
    x.mul(x).expect("square")
}

fn dz(x: &Matrix) -> Matrix {
    drazin(x).expect("square")
}

fn powm(x: &Matrix, e: u32) -> Matrix {
    x.pow(e).expect("square")
}

/// `alpha X + beta Y`.
fn wsum(alpha: &ExactScalar, x: &Matrix, beta: &ExactScalar, y: &Matrix) -> Matrix {
    &x.scale(alpha).expect("same field") + &y.scale(beta).expect("same field")
}

/// `X N^e Y`.
fn sandwich(x: &Matrix, n: &Matrix, e: u32, y: &Matrix) -> Matrix {
    x.mul(&powm(n, e)).and_then(|t| t.mul(y)).expect("square")
}

fn signed(m: Matrix, negate: bool) -> Matrix {
    if negate {
        m.neg()
    } else {
        m
    }
}

/// `((sqrt(5) - 1)/2) I` or `((sqrt(5) + 1)/2) I`, per the sign of the
/// rational part.
fn golden_eye(m: usize, field: FieldSpec, plus: bool) -> Matrix {
    let q = if plus { rat(1, 2) } else { rat(-1, 2) };
    let s = ExactScalar::from_components(q, rat(0, 1), rat(1, 2), rat(0, 1), field)
        .expect("field carries the root");
    Matrix::scalar_identity(m, &s)
}

/// Every clause must hold on its own.
fn all_hold(clauses: &[(&str, bool)]) -> Outcome {
    for &(label, ok) in clauses {
        if !ok {
            return fail(label, "does not hold", "claimed inclusion fails");
        }
    }
    Outcome::Pass
}

pub(super) fn v31(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, id, n) = pair_parts(inst);
    check_mat_chain(&[("(A - B)^2 + (A + B - I)^2", &(&sq(&(a - b)) + &sq(&n))), ("I", &id)])
}

pub(super) fn v32(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, id, _) = pair_parts(inst);
    let cross = &a.mul(b).expect("square") + &b.mul(a).expect("square");
    let shifted = &(a + b) - &scale_rat(&id, 1, 2);
    check_mat_chain(&[
        ("AB + BA + I/4", &(&cross + &scale_rat(&id, 1, 4))),
        ("(A + B - I/2)^2", &sq(&shifted)),
    ])
}

fn v33(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, id, _) = pair_parts(inst);
    let m = a.rows() as i64;
    check_eq_all(&[
        ("r((A - B)^2)", ri(&sq(&(a - b)))),
        (
            "r(A + B) + r(2I - A - B) - m",
            ri(&(a + b)) + ri(&(&scale_rat(&id, 2, 1) - &(a + b))) - m,
        ),
    ])
}

fn v34(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, id, n) = pair_parts(inst);
    let m = a.rows() as i64;
    check_eq_all(&[
        ("r((I - A - B)^2)", ri(&sq(&n))),
        (
            "r(I + A - B) + r(I - A + B) - m",
            ri(&(&(&id + a) - b)) + ri(&(&(&id - a) + b)) - m,
        ),
    ])
}

fn v35(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, id, _) = pair_parts(inst);
    let m = a.rows() as i64;
    let cross = &a.mul(b).expect("square") + &b.mul(a).expect("square");
    check_eq_all(&[
        ("r(AB + BA)", ri(&cross)),
        ("r(I - A - B) + r(A + B) - m", ri(&(&id - &(a + b))) + ri(&(a + b)) - m),
    ])
}

pub(super) fn v36(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, id, _) = pair_parts(inst);
    let m = a.rows() as i64;
    let cross = &a.mul(b).expect("square") + &b.mul(a).expect("square");
    let low = golden_eye(a.rows(), a.field(), false);
    let high = golden_eye(a.rows(), a.field(), true);
    check_eq_all(&[
        ("r(I - AB - BA)", ri(&(&id - &cross))),
        (
            "r(((sqrt5 - 1)/2)I + A + B) + r(((sqrt5 + 1)/2)I - A - B) - m",
            ri(&(&low + &(a + b))) + ri(&(&high - &(a + b))) - m,
        ),
    ])
}

pub(super) fn v37(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, id, _) = pair_parts(inst);
    let m = a.rows() as i64;
    let cross = &a.mul(b).expect("square") + &b.mul(a).expect("square");
    check_eq_all(&[
        ("r(2I - AB - BA)", ri(&(&scale_rat(&id, 2, 1) - &cross))),
        (
            "r(I + A + B) + r(2I - A - B) - m",
            ri(&(&id + &(a + b))) + ri(&(&scale_rat(&id, 2, 1) - &(a + b))) - m,
        ),
    ])
}

fn v38(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, id, n) = pair_parts(inst);
    let m = a.rows() as i64;
    check_iff(&[
        ("(A - B)^2 = 0", sq(&(a - b)).is_zero()),
        ("(I - A - B)^2 = I", sq(&n) == id),
        (
            "r(A + B) + r(2I - A - B) = m",
            ri(&(a + b)) + ri(&(&scale_rat(&id, 2, 1) - &(a + b))) == m,
        ),
    ])
}

pub(super) fn v39(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, id, n) = pair_parts(inst);
    let half = scale_rat(&id, 1, 2);
    check_iff(&[
        ("(A - B)^2 = I/2", sq(&(a - b)) == half),
        ("(I - A - B)^2 = I/2", sq(&n) == half),
    ])
}

pub(super) fn v310(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, id, n) = pair_parts(inst);
    let m = a.rows() as i64;
    check_iff(&[
        ("(A - B)^2 = I", sq(&(a - b)) == id),
        ("(I - A - B)^2 = 0", sq(&n).is_zero()),
        (
            "r(I + A - B) + r(I - A + B) = m",
            ri(&(&(&id + a) - b)) + ri(&(&(&id - a) + b)) == m,
        ),
    ])
}

/// `AB + BA = (num/den) I` against `(A + B - I/2)^2 = (num/den) I`, with an
/// optional third rank clause.
fn cross_level(
    inst: &Instance,
    cross_label: &str,
    cross_num: i64,
    cross_den: i64,
    square_label: &str,
    square_num: i64,
    square_den: i64,
    extra: Option<(&str, bool)>,
) -> Outcome {
    let (a, b, id, _) = pair_parts(inst);
    let cross = &a.mul(b).expect("square") + &b.mul(a).expect("square");
    let shifted = &(a + b) - &scale_rat(&id, 1, 2);
    let mut clauses = vec![
        (cross_label, cross == scale_rat(&id, cross_num, cross_den)),
        (square_label, sq(&shifted) == scale_rat(&id, square_num, square_den)),
    ];
    if let Some(clause) = extra {
        clauses.push(clause);
    }
    check_iff(&clauses)
}

pub(super) fn v311(inst: &Instance, _p: &Params) -> Outcome {
    cross_level(inst, "AB + BA = -2I", -2, 1, "(A + B - I/2)^2 = -(7/4)I", -7, 4, None)
}

pub(super) fn v312(inst: &Instance, _p: &Params) -> Outcome {
    cross_level(inst, "AB + BA = -I", -1, 1, "(A + B - I/2)^2 = -(3/4)I", -3, 4, None)
}

pub(super) fn v313(inst: &Instance, _p: &Params) -> Outcome {
    cross_level(inst, "AB + BA = -I/4", -1, 4, "(A + B - I/2)^2 = 0", 0, 1, None)
}

pub(super) fn v314(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, id, _) = pair_parts(inst);
    let m = a.rows() as i64;
    let rank_clause = ri(&(&id - &(a + b))) + ri(&(a + b)) == m;
    cross_level(
        inst,
        "AB + BA = 0",
        0,
        1,
        "(A + B - I/2)^2 = I/4",
        1,
        4,
        Some(("r(I - A - B) + r(A + B) = m", rank_clause)),
    )
}

pub(super) fn v315(inst: &Instance, _p: &Params) -> Outcome {
    cross_level(inst, "AB + BA = (3/4)I", 3, 4, "(A + B - I/2)^2 = I", 1, 1, None)
}

pub(super) fn v316(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, _, _) = pair_parts(inst);
    let m = a.rows() as i64;
    let low = golden_eye(a.rows(), a.field(), false);
    let high = golden_eye(a.rows(), a.field(), true);
    let rank_clause = ri(&(&low + &(a + b))) + ri(&(&high - &(a + b))) == m;
    cross_level(
        inst,
        "AB + BA = I",
        1,
        1,
        "(A + B - I/2)^2 = (5/4)I",
        5,
        4,
        Some(("r(((sqrt5 - 1)/2)I + A + B) + r(((sqrt5 + 1)/2)I - A - B) = m", rank_clause)),
    )
}

pub(super) fn v317(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, id, _) = pair_parts(inst);
    let m = a.rows() as i64;
    let rank_clause =
        ri(&(&id + &(a + b))) + ri(&(&scale_rat(&id, 2, 1) - &(a + b))) == m;
    cross_level(
        inst,
        "AB + BA = 2I",
        2,
        1,
        "(A + B - I/2)^2 = (9/4)I",
        9,
        4,
        Some(("r(I + A + B) + r(2I - A - B) = m", rank_clause)),
    )
}

pub(super) fn vv318(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, id, _) = pair_parts(inst);
    let m = a.rows() as i64;
    check_iff(&[
        ("r(A - B) = m", ri(&(a - b)) == m),
        (
            "r(A + B) = r(2I - A - B) = m",
            ri(&(a + b)) == m && ri(&(&scale_rat(&id, 2, 1) - &(a + b))) == m,
        ),
    ])
}

fn vv319(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, id, n) = pair_parts(inst);
    let m = a.rows() as i64;
    check_iff(&[
        ("r(I - A - B) = m", ri(&n) == m),
        (
            "r(I + A - B) = r(I - A + B) = m",
            ri(&(&(&id + a) - b)) == m && ri(&(&(&id - a) + b)) == m,
        ),
    ])
}

fn vv320(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, id, _) = pair_parts(inst);
    let m = a.rows() as i64;
    let cross = &a.mul(b).expect("square") + &b.mul(a).expect("square");
    check_iff(&[
        ("r(AB + BA) = m", ri(&cross) == m),
        (
            "r(I - A - B) = r(A + B) = m",
            ri(&(&id - &(a + b))) == m && ri(&(a + b)) == m,
        ),
    ])
}

pub(super) fn vv321(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, id, _) = pair_parts(inst);
    let m = a.rows() as i64;
    let cross = &a.mul(b).expect("square") + &b.mul(a).expect("square");
    let low = golden_eye(a.rows(), a.field(), false);
    let high = golden_eye(a.rows(), a.field(), true);
    check_iff(&[
        ("r(I - AB - BA) = m", ri(&(&id - &cross)) == m),
        (
            "r(((sqrt5 - 1)/2)I + A + B) = r(((sqrt5 + 1)/2)I - A - B) = m",
            ri(&(&low + &(a + b))) == m && ri(&(&high - &(a + b))) == m,
        ),
    ])
}

pub(super) fn vv322(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, id, _) = pair_parts(inst);
    let m = a.rows() as i64;
    let cross = &a.mul(b).expect("square") + &b.mul(a).expect("square");
    check_iff(&[
        ("r(2I - AB - BA) = m", ri(&(&scale_rat(&id, 2, 1) - &cross)) == m),
        (
            "r(I + A + B) = r(2I - A - B) = m",
            ri(&(&id + &(a + b))) == m
                && ri(&(&scale_rat(&id, 2, 1) - &(a + b))) == m,
        ),
    ])
}

/// `alpha (AB..)^k + beta (BA..)^k` against both factorizations through
/// `N^e`. An odd `N`-power intertwines `A` with `B`, so the right-hand factor
/// swaps the coefficients; an even power commutes with each of them, so it
/// does not.
fn weighted_chain(inst: &Instance, p: &Params, tailed: bool, k: u32, swap: bool) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let (al, be) = (p.alpha(), p.beta());
    let (x, y) = if tailed {
        let aba = a.mul(b).and_then(|t| t.mul(a)).expect("square");
        let bab = b.mul(a).and_then(|t| t.mul(b)).expect("square");
        (powm(&aba, k), powm(&bab, k))
    } else {
        let ab = a.mul(b).expect("square");
        let ba = b.mul(a).expect("square");
        (powm(&ab, k), powm(&ba, k))
    };
    let e = if tailed { 2 * k } else { 2 * k - 1 };
    let ne = powm(&n, e);
    let right = if swap { wsum(be, a, al, b) } else { wsum(al, a, be, b) };
    let right_label =
        if swap { "N^e (beta A + alpha B)" } else { "N^e (alpha A + beta B)" };
    check_mat_chain(&[
        ("alpha X^k + beta Y^k", &wsum(al, &x, be, &y)),
        ("(alpha A + beta B) N^e", &wsum(al, a, be, b).mul(&ne).expect("square")),
        (right_label, &ne.mul(&right).expect("square")),
    ])
}

pub(super) fn ff31(inst: &Instance, p: &Params) -> Outcome {
    weighted_chain(inst, p, false, 1, true)
}

pub(super) fn ff32(inst: &Instance, p: &Params) -> Outcome {
    weighted_chain(inst, p, true, 1, false)
}

pub(super) fn ff32_literal(inst: &Instance, p: &Params) -> Outcome {
    weighted_chain(inst, p, true, 1, true)
}

pub(super) fn ff33(inst: &Instance, p: &Params) -> Outcome {
    weighted_chain(inst, p, false, p.k, true)
}

pub(super) fn ff34(inst: &Instance, p: &Params) -> Outcome {
    weighted_chain(inst, p, true, p.k, false)
}

pub(super) fn ff34_literal(inst: &Instance, p: &Params) -> Outcome {
    weighted_chain(inst, p, true, p.k, true)
}

pub(super) fn tk32ns(inst: &Instance, p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let m = a.rows();
    let (al, be) = (p.alpha(), p.beta());
    let ab = a.mul(b).expect("square");
    let ba = b.mul(a).expect("square");
    let aba = ab.mul(a).expect("square");
    let bab = ba.mul(b).expect("square");
    let ns = |x: &Matrix| x.rank() == m;
    check_iff(&[
        ("alpha AB + beta BA nonsingular", ns(&wsum(al, &ab, be, &ba))),
        ("alpha ABA + beta BAB nonsingular", ns(&wsum(al, &aba, be, &bab))),
        (
            "alpha (AB)^k + beta (BA)^k nonsingular",
            ns(&wsum(al, &powm(&ab, p.k), be, &powm(&ba, p.k))),
        ),
        (
            "alpha (ABA)^k + beta (BAB)^k nonsingular",
            ns(&wsum(al, &powm(&aba, p.k), be, &powm(&bab, p.k))),
        ),
        (
            "alpha A + beta B and A + B - I both nonsingular",
            ns(&wsum(al, a, be, b)) && ns(&n),
        ),
    ])
}

/// Inverse of `alpha (AB..)^k + beta (BA..)^k` against both factored inverses,
/// conditional on the two factors being nonsingular. `swap` mirrors the
/// coefficient handling of the underlying factorization.
fn weighted_inverse_chain(
    inst: &Instance,
    p: &Params,
    tailed: bool,
    k: u32,
    swap: bool,
) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let (al, be) = (p.alpha(), p.beta());
    let forward = wsum(al, a, be, b);
    let mirror = if swap { wsum(be, a, al, b) } else { wsum(al, a, be, b) };
    let (Ok(fi), Ok(ni)) = (forward.inverse(), n.inverse()) else {
        return Outcome::Miss("needs alpha A + beta B and A + B - I nonsingular");
    };
    let Ok(mi) = mirror.inverse() else {
        return fail(
            "the mirror factor",
            "singular",
            "it must be nonsingular alongside the forward one",
        );
    };
    let (x, y) = if tailed {
        let aba = a.mul(b).and_then(|t| t.mul(a)).expect("square");
        let bab = b.mul(a).and_then(|t| t.mul(b)).expect("square");
        (powm(&aba, k), powm(&bab, k))
    } else {
        let ab = a.mul(b).expect("square");
        let ba = b.mul(a).expect("square");
        (powm(&ab, k), powm(&ba, k))
    };
    let e = if tailed { 2 * k } else { 2 * k - 1 };
    let Ok(li) = wsum(al, &x, be, &y).inverse() else {
        return fail(
            "alpha X^k + beta Y^k",
            "singular",
            "a product of nonsingular factors must be nonsingular",
        );
    };
    let nie = powm(&ni, e);
    let mirror_label =
        if swap { "(beta A + alpha B)^-1 N^-e" } else { "(alpha A + beta B)^-1 N^-e" };
    check_mat_chain(&[
        ("(alpha X^k + beta Y^k)^-1", &li),
        ("N^-e (alpha A + beta B)^-1", &nie.mul(&fi).expect("square")),
        (mirror_label, &mi.mul(&nie).expect("square")),
    ])
}

pub(super) fn dd37(inst: &Instance, p: &Params) -> Outcome {
    weighted_inverse_chain(inst, p, false, 1, true)
}

pub(super) fn dd38(inst: &Instance, p: &Params) -> Outcome {
    weighted_inverse_chain(inst, p, true, 1, false)
}

pub(super) fn dd38_literal(inst: &Instance, p: &Params) -> Outcome {
    weighted_inverse_chain(inst, p, true, 1, true)
}

pub(super) fn dd39(inst: &Instance, p: &Params) -> Outcome {
    weighted_inverse_chain(inst, p, false, p.k, true)
}

pub(super) fn dd310(inst: &Instance, p: &Params) -> Outcome {
    weighted_inverse_chain(inst, p, true, p.k, false)
}

pub(super) fn dd310_literal(inst: &Instance, p: &Params) -> Outcome {
    weighted_inverse_chain(inst, p, true, p.k, true)
}

pub(super) fn w3(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let comm = &a.mul(b).expect("square") - &b.mul(a).expect("square");
    check_mat_chain(&[
        ("AB - BA", &comm),
        ("(A - B)(A + B - I)", &(a - b).mul(&n).expect("square")),
        ("-(A + B - I)(A - B)", &n.mul(&(a - b)).expect("square").neg()),
    ])
}

pub(super) fn w4(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let cross = &a.mul(b).expect("square") + &b.mul(a).expect("square");
    check_mat_chain(&[
        ("AB + BA", &cross),
        ("(A + B)(A + B - I)", &(a + b).mul(&n).expect("square")),
        ("(A + B - I)(A + B)", &n.mul(&(a + b)).expect("square")),
    ])
}

pub(super) fn w14(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let lhs = &a.mul(b).and_then(|t| t.mul(a)).expect("square")
        - &b.mul(a).and_then(|t| t.mul(b)).expect("square");
    let n2 = sq(&n);
    check_mat_chain(&[
        ("ABA - BAB", &lhs),
        ("(A - B)(A + B - I)^2", &(a - b).mul(&n2).expect("square")),
        ("(A + B - I)^2 (A - B)", &n2.mul(&(a - b)).expect("square")),
    ])
}

pub(super) fn w15(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let lhs = &a.mul(b).and_then(|t| t.mul(a)).expect("square")
        + &b.mul(a).and_then(|t| t.mul(b)).expect("square");
    let n2 = sq(&n);
    check_mat_chain(&[
        ("ABA + BAB", &lhs),
        ("(A + B)(A + B - I)^2", &(a + b).mul(&n2).expect("square")),
        ("(A + B - I)^2 (A + B)", &n2.mul(&(a + b)).expect("square")),
    ])
}

pub(super) fn w6(inst: &Instance, p: &Params) -> Outcome {
    let (a, b, id, n) = pair_parts(inst);
    let k = p.k;
    let comm = &a.mul(b).expect("square") - &b.mul(a).expect("square");
    let negate = (k * (k - 1) / 2) % 2 == 1;
    let flipped = &id - &(a + b);
    check_mat_chain(&[
        ("(AB - BA)^k", &powm(&comm, k)),
        (
            "(-1)^(k(k-1)/2) (A - B)^k (A + B - I)^k",
            &signed(powm(&(a - b), k).mul(&powm(&n, k)).expect("square"), negate),
        ),
        (
            "(-1)^(k(k-1)/2) (I - A - B)^k (A - B)^k",
            &signed(powm(&flipped, k).mul(&powm(&(a - b), k)).expect("square"), negate),
        ),
    ])
}

pub(super) fn w7(inst: &Instance, p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let k = p.k;
    let cross = &a.mul(b).expect("square") + &b.mul(a).expect("square");
    check_mat_chain(&[
        ("(AB + BA)^k", &powm(&cross, k)),
        (
            "(A + B)^k (A + B - I)^k",
            &powm(&(a + b), k).mul(&powm(&n, k)).expect("square"),
        ),
        (
            "(A + B - I)^k (A + B)^k",
            &powm(&n, k).mul(&powm(&(a + b), k)).expect("square"),
        ),
    ])
}

pub(super) fn w8(inst: &Instance, p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let k = p.k;
    let lhs = &a.mul(b).and_then(|t| t.mul(a)).expect("square")
        - &b.mul(a).and_then(|t| t.mul(b)).expect("square");
    let n2k = powm(&n, 2 * k);
    check_mat_chain(&[
        ("(ABA - BAB)^k", &powm(&lhs, k)),
        ("(A - B)^k (A + B - I)^2k", &powm(&(a - b), k).mul(&n2k).expect("square")),
        ("(A + B - I)^2k (A - B)^k", &n2k.mul(&powm(&(a - b), k)).expect("square")),
    ])
}

pub(super) fn w9(inst: &Instance, p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let k = p.k;
    let lhs = &a.mul(b).and_then(|t| t.mul(a)).expect("square")
        + &b.mul(a).and_then(|t| t.mul(b)).expect("square");
    let n2k = powm(&n, 2 * k);
    check_mat_chain(&[
        ("(ABA + BAB)^k", &powm(&lhs, k)),
        ("(A + B)^k (A + B - I)^2k", &powm(&(a + b), k).mul(&n2k).expect("square")),
        ("(A + B - I)^2k (A + B)^k", &n2k.mul(&powm(&(a + b), k)).expect("square")),
    ])
}

pub(super) fn w10(inst: &Instance, p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let k = p.k;
    let ab = a.mul(b).expect("square");
    let ba = b.mul(a).expect("square");
    let nodd = powm(&n, 2 * k - 1);
    check_mat_chain(&[
        ("(AB)^k - (BA)^k", &(&powm(&ab, k) - &powm(&ba, k))),
        ("(A - B)(A + B - I)^(2k-1)", &(a - b).mul(&nodd).expect("square")),
        ("-(A + B - I)^(2k-1)(A - B)", &nodd.mul(&(a - b)).expect("square").neg()),
    ])
}

pub(super) fn w11(inst: &Instance, p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let k = p.k;
    let ab = a.mul(b).expect("square");
    let ba = b.mul(a).expect("square");
    let nodd = powm(&n, 2 * k - 1);
    check_mat_chain(&[
        ("(AB)^k + (BA)^k", &(&powm(&ab, k) + &powm(&ba, k))),
        ("(A + B)(A + B - I)^(2k-1)", &(a + b).mul(&nodd).expect("square")),
        ("(A + B - I)^(2k-1)(A + B)", &nodd.mul(&(a + b)).expect("square")),
    ])
}

pub(super) fn w12(inst: &Instance, p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let k = p.k;
    let aba = a.mul(b).and_then(|t| t.mul(a)).expect("square");
    let bab = b.mul(a).and_then(|t| t.mul(b)).expect("square");
    let n2k = powm(&n, 2 * k);
    check_mat_chain(&[
        ("(ABA)^k - (BAB)^k", &(&powm(&aba, k) - &powm(&bab, k))),
        ("(A - B)(A + B - I)^2k", &(a - b).mul(&n2k).expect("square")),
        ("(A + B - I)^2k (A - B)", &n2k.mul(&(a - b)).expect("square")),
    ])
}

pub(super) fn w13(inst: &Instance, p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let k = p.k;
    let aba = a.mul(b).and_then(|t| t.mul(a)).expect("square");
    let bab = b.mul(a).and_then(|t| t.mul(b)).expect("square");
    let n2k = powm(&n, 2 * k);
    check_mat_chain(&[
        ("(ABA)^k + (BAB)^k", &(&powm(&aba, k) + &powm(&bab, k))),
        ("(A + B)(A + B - I)^2k", &(a + b).mul(&n2k).expect("square")),
        ("(A + B - I)^2k (A + B)", &n2k.mul(&(a + b)).expect("square")),
    ])
}

/// `sum_{j=1..k} X^j +- Y^j`.
fn telescoped(x: &Matrix, y: &Matrix, k: u32, plus: bool) -> Matrix {
    let mut acc = Matrix::zeros(x.rows(), x.cols(), x.field());
    for j in 1..=k {
        let term = if plus {
            &powm(x, j) + &powm(y, j)
        } else {
            &powm(x, j) - &powm(y, j)
        };
        acc = &acc + &term;
    }
    acc
}

/// `sum_{j=1..k} N^(2j-1)` or `sum_{j=1..k} N^(2j)`.
fn power_sum(n: &Matrix, k: u32, odd: bool) -> Matrix {
    let mut acc = Matrix::zeros(n.rows(), n.cols(), n.field());
    for j in 1..=k {
        let e = if odd { 2 * j - 1 } else { 2 * j };
        acc = &acc + &powm(n, e);
    }
    acc
}

pub(super) fn tk33s1(inst: &Instance, p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let ab = a.mul(b).expect("square");
    let ba = b.mul(a).expect("square");
    let s = power_sum(&n, p.k, true);
    check_mat_chain(&[
        ("sum (AB)^j - (BA)^j", &telescoped(&ab, &ba, p.k, false)),
        ("(A - B) sum N^(2j-1)", &(a - b).mul(&s).expect("square")),
        ("sum N^(2j-1) (B - A)", &s.mul(&(b - a)).expect("square")),
    ])
}

pub(super) fn tk33s2(inst: &Instance, p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let ab = a.mul(b).expect("square");
    let ba = b.mul(a).expect("square");
    let s = power_sum(&n, p.k, true);
    check_mat_chain(&[
        ("sum (AB)^j + (BA)^j", &telescoped(&ab, &ba, p.k, true)),
        ("(A + B) sum N^(2j-1)", &(a + b).mul(&s).expect("square")),
        ("sum N^(2j-1) (A + B)", &s.mul(&(a + b)).expect("square")),
    ])
}

pub(super) fn tk33s3(inst: &Instance, p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let aba = a.mul(b).and_then(|t| t.mul(a)).expect("square");
    let bab = b.mul(a).and_then(|t| t.mul(b)).expect("square");
    let s = power_sum(&n, p.k, false);
    check_mat_chain(&[
        ("sum (ABA)^j - (BAB)^j", &telescoped(&aba, &bab, p.k, false)),
        ("(A - B) sum N^(2j)", &(a - b).mul(&s).expect("square")),
        ("sum N^(2j) (A - B)", &s.mul(&(a - b)).expect("square")),
    ])
}

pub(super) fn tk33s4(inst: &Instance, p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let aba = a.mul(b).and_then(|t| t.mul(a)).expect("square");
    let bab = b.mul(a).and_then(|t| t.mul(b)).expect("square");
    let s = power_sum(&n, p.k, false);
    check_mat_chain(&[
        ("sum (ABA)^j + (BAB)^j", &telescoped(&aba, &bab, p.k, true)),
        ("(A + B) sum N^(2j)", &(a + b).mul(&s).expect("square")),
        ("sum N^(2j) (A + B)", &s.mul(&(a + b)).expect("square")),
    ])
}

pub(super) fn tk34a(inst: &Instance, p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let comm = &a.mul(b).expect("square") - &b.mul(a).expect("square");
    let lhs = powm(&comm, p.k);
    all_hold(&[
        (
            "R((AB - BA)^k) within R((A - B)^k)",
            bool_of(lhs.range_contained_in(&powm(&(a - b), p.k))),
        ),
        (
            "R((AB - BA)^k) within R((A + B - I)^k)",
            bool_of(lhs.range_contained_in(&powm(&n, p.k))),
        ),
    ])
}

pub(super) fn tk34b(inst: &Instance, p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let cross = &a.mul(b).expect("square") + &b.mul(a).expect("square");
    let lhs = powm(&cross, p.k);
    all_hold(&[
        (
            "R((AB + BA)^k) within R((A + B)^k)",
            bool_of(lhs.range_contained_in(&powm(&(a + b), p.k))),
        ),
        (
            "R((AB + BA)^k) within R((A + B - I)^k)",
            bool_of(lhs.range_contained_in(&powm(&n, p.k))),
        ),
    ])
}

pub(super) fn tk34c(inst: &Instance, p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let comm = &a.mul(b).expect("square") - &b.mul(a).expect("square");
    let rhs = powm(&comm, p.k);
    all_hold(&[
        (
            "N((A - B)^k) within N((AB - BA)^k)",
            bool_of(powm(&(a - b), p.k).nullspace_contained_in(&rhs)),
        ),
        (
            "N((A + B - I)^k) within N((AB - BA)^k)",
            bool_of(powm(&n, p.k).nullspace_contained_in(&rhs)),
        ),
    ])
}

pub(super) fn tk34d(inst: &Instance, p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let cross = &a.mul(b).expect("square") + &b.mul(a).expect("square");
    let rhs = powm(&cross, p.k);
    all_hold(&[
        (
            "N((A + B)^k) within N((AB + BA)^k)",
            bool_of(powm(&(a + b), p.k).nullspace_contained_in(&rhs)),
        ),
        (
            "N((A + B - I)^k) within N((AB + BA)^k)",
            bool_of(powm(&n, p.k).nullspace_contained_in(&rhs)),
        ),
    ])
}

fn w24(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let comm = &a.mul(b).expect("square") - &b.mul(a).expect("square");
    let dd = dz(&(a - b));
    let nd = dz(&n);
    check_mat_chain(&[
        ("(AB - BA)^D", &dz(&comm)),
        ("-(A - B)^D (A + B - I)^D", &dd.mul(&nd).expect("square").neg()),
        ("(A + B - I)^D (A - B)^D", &nd.mul(&dd).expect("square")),
    ])
}

fn w24_literal(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let comm = &a.mul(b).expect("square") - &b.mul(a).expect("square");
    let dd = dz(&(a - b));
    let nd = dz(&n);
    check_mat_chain(&[
        ("(AB - BA)^D", &dz(&comm)),
        ("(A - B)^D (A + B - I)^D", &dd.mul(&nd).expect("square")),
        ("-(A + B - I)^D (A - B)^D", &nd.mul(&dd).expect("square").neg()),
    ])
}

fn w25(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let cross = &a.mul(b).expect("square") + &b.mul(a).expect("square");
    let sd = dz(&(a + b));
    let nd = dz(&n);
    check_mat_chain(&[
        ("(AB + BA)^D", &dz(&cross)),
        ("(A + B)^D (A + B - I)^D", &sd.mul(&nd).expect("square")),
        ("(A + B - I)^D (A + B)^D", &nd.mul(&sd).expect("square")),
    ])
}

fn w26(inst: &Instance, p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let k = p.k;
    let ab = a.mul(b).expect("square");
    let ba = b.mul(a).expect("square");
    let dd = dz(&(a - b));
    let ndodd = powm(&dz(&n), 2 * k - 1);
    check_mat_chain(&[
        ("((AB)^k - (BA)^k)^D", &dz(&(&powm(&ab, k) - &powm(&ba, k)))),
        ("-(A - B)^D (N^D)^(2k-1)", &dd.mul(&ndodd).expect("square").neg()),
        ("(N^D)^(2k-1) (A - B)^D", &ndodd.mul(&dd).expect("square")),
    ])
}

fn w26_literal(inst: &Instance, p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let k = p.k;
    let ab = a.mul(b).expect("square");
    let ba = b.mul(a).expect("square");
    let dd = dz(&(a - b));
    let ndodd = powm(&dz(&n), 2 * k - 1);
    check_mat_chain(&[
        ("((AB)^k - (BA)^k)^D", &dz(&(&powm(&ab, k) - &powm(&ba, k)))),
        ("(A - B)^D (N^D)^(2k-1)", &dd.mul(&ndodd).expect("square")),
        ("-(N^D)^(2k-1) (A - B)^D", &ndodd.mul(&dd).expect("square").neg()),
    ])
}

fn w27(inst: &Instance, p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let k = p.k;
    let ab = a.mul(b).expect("square");
    let ba = b.mul(a).expect("square");
    let sd = dz(&(a + b));
    let ndodd = powm(&dz(&n), 2 * k - 1);
    check_mat_chain(&[
        ("((AB)^k + (BA)^k)^D", &dz(&(&powm(&ab, k) + &powm(&ba, k)))),
        ("(A + B)^D (N^D)^(2k-1)", &sd.mul(&ndodd).expect("square")),
        ("(N^D)^(2k-1) (A + B)^D", &ndodd.mul(&sd).expect("square")),
    ])
}

fn w28(inst: &Instance, p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let k = p.k;
    let aba = a.mul(b).and_then(|t| t.mul(a)).expect("square");
    let bab = b.mul(a).and_then(|t| t.mul(b)).expect("square");
    let dd = dz(&(a - b));
    let ndeven = powm(&dz(&n), 2 * k);
    check_mat_chain(&[
        ("((ABA)^k - (BAB)^k)^D", &dz(&(&powm(&aba, k) - &powm(&bab, k)))),
        ("(A - B)^D (N^D)^2k", &dd.mul(&ndeven).expect("square")),
        ("(N^D)^2k (A - B)^D", &ndeven.mul(&dd).expect("square")),
    ])
}

fn w29(inst: &Instance, p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let k = p.k;
    let aba = a.mul(b).and_then(|t| t.mul(a)).expect("square");
    let bab = b.mul(a).and_then(|t| t.mul(b)).expect("square");
    let sd = dz(&(a + b));
    let ndeven = powm(&dz(&n), 2 * k);
    check_mat_chain(&[
        ("((ABA)^k + (BAB)^k)^D", &dz(&(&powm(&aba, k) + &powm(&bab, k)))),
        ("(A + B)^D (N^D)^2k", &sd.mul(&ndeven).expect("square")),
        ("(N^D)^2k (A + B)^D", &ndeven.mul(&sd).expect("square")),
    ])
}

pub(super) fn w32(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, _, _) = pair_parts(inst);
    let aba = a.mul(b).and_then(|t| t.mul(a)).expect("square");
    let d2 = sq(&(a - b));
    check_mat_chain(&[
        ("A - ABA", &(a - &aba)),
        ("A (A - B)^2", &a.mul(&d2).expect("square")),
        ("(A - B)^2 A", &d2.mul(a).expect("square")),
    ])
}

pub(super) fn w33(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, _, _) = pair_parts(inst);
    let bab = b.mul(a).and_then(|t| t.mul(b)).expect("square");
    let d2 = sq(&(a - b));
    check_mat_chain(&[
        ("B - BAB", &(b - &bab)),
        ("B (A - B)^2", &b.mul(&d2).expect("square")),
        ("(A - B)^2 B", &d2.mul(b).expect("square")),
    ])
}

pub(super) fn w34(inst: &Instance, p: &Params) -> Outcome {
    let (a, b, _, _) = pair_parts(inst);
    let aba = a.mul(b).and_then(|t| t.mul(a)).expect("square");
    let d2k = powm(&(a - b), 2 * p.k);
    check_mat_chain(&[
        ("(A - ABA)^k", &powm(&(a - &aba), p.k)),
        ("A (A - B)^2k", &a.mul(&d2k).expect("square")),
        ("(A - B)^2k A", &d2k.mul(a).expect("square")),
    ])
}

pub(super) fn w35(inst: &Instance, p: &Params) -> Outcome {
    let (a, b, _, _) = pair_parts(inst);
    let bab = b.mul(a).and_then(|t| t.mul(b)).expect("square");
    let d2k = powm(&(a - b), 2 * p.k);
    check_mat_chain(&[
        ("(B - BAB)^k", &powm(&(b - &bab), p.k)),
        ("B (A - B)^2k", &b.mul(&d2k).expect("square")),
        ("(A - B)^2k B", &d2k.mul(b).expect("square")),
    ])
}

pub(super) fn w36(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let aba = a.mul(b).and_then(|t| t.mul(a)).expect("square");
    let n2 = sq(&n);
    check_mat_chain(&[
        ("ABA", &aba),
        ("A (A + B - I)^2", &a.mul(&n2).expect("square")),
        ("(A + B - I)^2 A", &n2.mul(a).expect("square")),
    ])
}

pub(super) fn w37(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let bab = b.mul(a).and_then(|t| t.mul(b)).expect("square");
    let n2 = sq(&n);
    check_mat_chain(&[
        ("BAB", &bab),
        ("B (A + B - I)^2", &b.mul(&n2).expect("square")),
        ("(A + B - I)^2 B", &n2.mul(b).expect("square")),
    ])
}

pub(super) fn w38(inst: &Instance, p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let aba = a.mul(b).and_then(|t| t.mul(a)).expect("square");
    let n2k = powm(&n, 2 * p.k);
    check_mat_chain(&[
        ("(ABA)^k", &powm(&aba, p.k)),
        ("A (A + B - I)^2k", &a.mul(&n2k).expect("square")),
        ("(A + B - I)^2k A", &n2k.mul(a).expect("square")),
    ])
}

pub(super) fn w39(inst: &Instance, p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let bab = b.mul(a).and_then(|t| t.mul(b)).expect("square");
    let n2k = powm(&n, 2 * p.k);
    check_mat_chain(&[
        ("(BAB)^k", &powm(&bab, p.k)),
        ("B (A + B - I)^2k", &b.mul(&n2k).expect("square")),
        ("(A + B - I)^2k B", &n2k.mul(b).expect("square")),
    ])
}

pub(super) fn w40(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let ba = b.mul(a).expect("square");
    let n2 = sq(&n);
    check_mat_chain(&[
        ("(BA)^2", &sq(&ba)),
        ("BA (A + B - I)^2", &ba.mul(&n2).expect("square")),
        ("B (A + B - I)^2 A", &sandwich(b, &n, 2, a)),
    ])
}

pub(super) fn w41(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let ab = a.mul(b).expect("square");
    let n2 = sq(&n);
    check_mat_chain(&[
        ("(AB)^2", &sq(&ab)),
        ("AB (A + B - I)^2", &ab.mul(&n2).expect("square")),
        ("A (A + B - I)^2 B", &sandwich(a, &n, 2, b)),
    ])
}

pub(super) fn w42(inst: &Instance, p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let abk = powm(&a.mul(b).expect("square"), p.k);
    check_mat_chain(&[
        ("(AB)^k", &abk),
        ("A (A + B - I)^(2k-2) B", &sandwich(a, &n, 2 * p.k - 2, b)),
        ("A (A + B - I)^(2k-1) B", &sandwich(a, &n, 2 * p.k - 1, b)),
    ])
}

pub(super) fn w42_literal(inst: &Instance, p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let abk = powm(&a.mul(b).expect("square"), p.k);
    check_mat_chain(&[("(AB)^k", &abk), ("A (A + B - I)^k B", &sandwich(a, &n, p.k, b))])
}

pub(super) fn w43(inst: &Instance, p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let bak = powm(&b.mul(a).expect("square"), p.k);
    check_mat_chain(&[
        ("(BA)^k", &bak),
        ("B (A + B - I)^(2k-2) A", &sandwich(b, &n, 2 * p.k - 2, a)),
        ("B (A + B - I)^(2k-1) A", &sandwich(b, &n, 2 * p.k - 1, a)),
    ])
}

pub(super) fn w43_literal(inst: &Instance, p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let bak = powm(&b.mul(a).expect("square"), p.k);
    check_mat_chain(&[("(BA)^k", &bak), ("B (A + B - I)^k A", &sandwich(b, &n, p.k, a))])
}

fn w44(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, _, _) = pair_parts(inst);
    let aba = a.mul(b).and_then(|t| t.mul(a)).expect("square");
    let dd2 = sq(&dz(&(a - b)));
    check_mat_chain(&[
        ("(A - ABA)^D", &dz(&(a - &aba))),
        ("A ((A - B)^D)^2", &a.mul(&dd2).expect("square")),
        ("((A - B)^D)^2 A", &dd2.mul(a).expect("square")),
    ])
}

fn w45(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, _, _) = pair_parts(inst);
    let bab = b.mul(a).and_then(|t| t.mul(b)).expect("square");
    let dd2 = sq(&dz(&(a - b)));
    check_mat_chain(&[
        ("(B - BAB)^D", &dz(&(b - &bab))),
        ("B ((A - B)^D)^2", &b.mul(&dd2).expect("square")),
        ("((A - B)^D)^2 B", &dd2.mul(b).expect("square")),
    ])
}

fn w46(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let aba = a.mul(b).and_then(|t| t.mul(a)).expect("square");
    let nd2 = sq(&dz(&n));
    check_mat_chain(&[
        ("(ABA)^D", &dz(&aba)),
        ("A ((A + B - I)^D)^2", &a.mul(&nd2).expect("square")),
        ("((A + B - I)^D)^2 A", &nd2.mul(a).expect("square")),
    ])
}

fn w47(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, _, n) = pair_parts(inst);
    let bab = b.mul(a).and_then(|t| t.mul(b)).expect("square");
    let nd2 = sq(&dz(&n));
    check_mat_chain(&[
        ("(BAB)^D", &dz(&bab)),
        ("B ((A + B - I)^D)^2", &b.mul(&nd2).expect("square")),
        ("((A + B - I)^D)^2 B", &nd2.mul(b).expect("square")),
    ])
}

pub(super) fn entries() -> Vec<Entry> {
    use CheckerKind::*;
    use InputClass::IdempotentPair;
    vec![
        Entry::new("v31", MatrixIdentity, IdempotentPair,
            "(A - B)^2 + (A + B - I)^2 = I", v31),
        Entry::new("v32", MatrixIdentity, IdempotentPair,
            "AB + BA + I/4 = (A + B - I/2)^2", v32),
        Entry::new("v33", RankEquality, IdempotentPair,
            "r((A - B)^2) = r(A + B) + r(2I - A - B) - m", v33),
        Entry::new("v34", RankEquality, IdempotentPair,
            "r((I - A - B)^2) = r(I + A - B) + r(I - A + B) - m", v34),
        Entry::new("v35", RankEquality, IdempotentPair,
            "r(AB + BA) = r(I - A - B) + r(A + B) - m", v35),
        Entry::new("v36", RankEquality, IdempotentPair,
            "r(I - AB - BA) splits over the golden-ratio shifts of A + B", v36)
            .radicand(5),
        Entry::new("v37", RankEquality, IdempotentPair,
            "r(2I - AB - BA) = r(I + A + B) + r(2I - A - B) - m", v37),
        Entry::new("v38", FactEquivalence, IdempotentPair,
            "(A - B)^2 = 0 iff (I - A - B)^2 = I iff r(A + B) + r(2I - A - B) = m", v38),
        Entry::new("v39", FactEquivalence, IdempotentPair,
            "(A - B)^2 = I/2 iff (I - A - B)^2 = I/2", v39),
        Entry::new("v310", FactEquivalence, IdempotentPair,
            "(A - B)^2 = I iff (I - A - B)^2 = 0 iff r(I + A - B) + r(I - A + B) = m", v310)
            .noted("the final clause is printed as a bare difference with no equation; \
                    checked as r(I + A - B) + r(I - A + B) = m"),
        Entry::new("v311", FactEquivalence, IdempotentPair,
            "AB + BA = -2I iff (A + B - I/2)^2 = -(7/4)I", v311),
        Entry::new("v312", FactEquivalence, IdempotentPair,
            "AB + BA = -I iff (A + B - I/2)^2 = -(3/4)I", v312),
        Entry::new("v313", FactEquivalence, IdempotentPair,
            "AB + BA = -I/4 iff (A + B - I/2)^2 = 0", v313),
        Entry::new("v314", FactEquivalence, IdempotentPair,
            "AB + BA = 0 iff (A + B - I/2)^2 = I/4 iff r(I - A - B) + r(A + B) = m", v314),
        Entry::new("v315", FactEquivalence, IdempotentPair,
            "AB + BA = (3/4)I iff (A + B - I/2)^2 = I", v315),
        Entry::new("v316", FactEquivalence, IdempotentPair,
            "AB + BA = I iff (A + B - I/2)^2 = (5/4)I iff the golden-ratio ranks sum to m",
            v316)
            .radicand(5),
        Entry::new("v317", FactEquivalence, IdempotentPair,
            "AB + BA = 2I iff (A + B - I/2)^2 = (9/4)I iff r(I + A + B) + r(2I - A - B) = m",
            v317),
        Entry::new("vv318", FactEquivalence, IdempotentPair,
            "r(A - B) = m iff r(A + B) = r(2I - A - B) = m", vv318),
        Entry::new("vv319", FactEquivalence, IdempotentPair,
            "r(I - A - B) = m iff r(I + A - B) = r(I - A + B) = m", vv319),
        Entry::new("vv320", FactEquivalence, IdempotentPair,
            "r(AB + BA) = m iff r(I - A - B) = r(A + B) = m", vv320),
        Entry::new("vv321", FactEquivalence, IdempotentPair,
            "r(I - AB - BA) = m iff both golden-ratio shifts of A + B are nonsingular",
            vv321)
            .radicand(5),
        Entry::new("vv322", FactEquivalence, IdempotentPair,
            "r(2I - AB - BA) = m iff r(I + A + B) = r(2I - A - B) = m", vv322),
        Entry::new("ff31", MatrixIdentity, IdempotentPair,
            "alpha AB + beta BA = (alpha A + beta B) N = N (beta A + alpha B)", ff31)
            .with_scalars(TWO_SCALARS),
        Entry::new("ff32", MatrixIdentity, IdempotentPair,
            "alpha ABA + beta BAB = (alpha A + beta B) N^2 = N^2 (alpha A + beta B)", ff32)
            .with_scalars(TWO_SCALARS)
            .noted("the right-hand factor is printed with swapped coefficients, a pattern \
                    copied from the odd powers; N^2 commutes with A and B separately, so \
                    the coefficients stay put")
            .with_literal(ff32_literal),
        Entry::new("ff33", MatrixIdentity, IdempotentPair,
            "alpha (AB)^k + beta (BA)^k = (alpha A + beta B) N^(2k-1) = \
             N^(2k-1) (beta A + alpha B)",
            ff33)
            .swept()
            .with_scalars(TWO_SCALARS),
        Entry::new("ff34", MatrixIdentity, IdempotentPair,
            "alpha (ABA)^k + beta (BAB)^k = (alpha A + beta B) N^2k = \
             N^2k (alpha A + beta B)",
            ff34)
            .swept()
            .with_scalars(TWO_SCALARS)
            .noted("same swapped right-hand coefficients as the k = 1 even power; \
                    checked without the swap")
            .with_literal(ff34_literal),
        Entry::new("tk32ns", FactEquivalence, IdempotentPair,
            "the four weighted products are nonsingular together, exactly when \
             alpha A + beta B and N both are",
            tk32ns)
            .swept()
            .with_scalars(TWO_SCALARS)
            .noted("the printed chain drops a connective and repeats a clause; read as \
                    five pairwise-equivalent nonsingularity statements"),
        Entry::new("dd37", ConditionalInverseIdentity, IdempotentPair,
            "(alpha AB + beta BA)^-1 factors through N^-1 on either side", dd37)
            .with_scalars(TWO_SCALARS)
            .conditional(),
        Entry::new("dd38", ConditionalInverseIdentity, IdempotentPair,
            "(alpha ABA + beta BAB)^-1 factors through N^-2 on either side", dd38)
            .with_scalars(TWO_SCALARS)
            .conditional()
            .noted("inherits the swapped right-hand coefficients of the even-power \
                    factorization; checked without the swap")
            .with_literal(dd38_literal),
        Entry::new("dd39", ConditionalInverseIdentity, IdempotentPair,
            "(alpha (AB)^k + beta (BA)^k)^-1 factors through N^-(2k-1) on either side",
            dd39)
            .swept()
            .with_scalars(TWO_SCALARS)
            .conditional(),
        Entry::new("dd310", ConditionalInverseIdentity, IdempotentPair,
            "(alpha (ABA)^k + beta (BAB)^k)^-1 factors through N^-2k on either side",
            dd310)
            .swept()
            .with_scalars(TWO_SCALARS)
            .conditional()
            .noted("inherits the swapped right-hand coefficients of the even-power \
                    factorization; checked without the swap")
            .with_literal(dd310_literal),
        Entry::new("w3", MatrixIdentity, IdempotentPair,
            "AB - BA = (A - B) N = -N (A - B)", w3),
        Entry::new("w4", MatrixIdentity, IdempotentPair,
            "AB + BA = (A + B) N = N (A + B)", w4),
        Entry::new("w14", MatrixIdentity, IdempotentPair,
            "ABA - BAB = (A - B) N^2 = N^2 (A - B)", w14),
        Entry::new("w15", MatrixIdentity, IdempotentPair,
            "ABA + BAB = (A + B) N^2 = N^2 (A + B)", w15),
        Entry::new("w6", MatrixIdentity, IdempotentPair,
            "(AB - BA)^k = (-1)^(k(k-1)/2) (A - B)^k N^k = (-1)^(k(k-1)/2) (I - A - B)^k \
             (A - B)^k",
            w6)
            .swept(),
        Entry::new("w7", MatrixIdentity, IdempotentPair,
            "(AB + BA)^k = (A + B)^k N^k = N^k (A + B)^k", w7)
            .swept(),
        Entry::new("w8", MatrixIdentity, IdempotentPair,
            "(ABA - BAB)^k = (A - B)^k N^2k = N^2k (A - B)^k", w8)
            .swept(),
        Entry::new("w9", MatrixIdentity, IdempotentPair,
            "(ABA + BAB)^k = (A + B)^k N^2k = N^2k (A + B)^k", w9)
            .swept(),
        Entry::new("w10", MatrixIdentity, IdempotentPair,
            "(AB)^k - (BA)^k = (A - B) N^(2k-1) = -N^(2k-1) (A - B)", w10)
            .swept(),
        Entry::new("w11", MatrixIdentity, IdempotentPair,
            "(AB)^k + (BA)^k = (A + B) N^(2k-1) = N^(2k-1) (A + B)", w11)
            .swept(),
        Entry::new("w12", MatrixIdentity, IdempotentPair,
            "(ABA)^k - (BAB)^k = (A - B) N^2k = N^2k (A - B)", w12)
            .swept(),
        Entry::new("w13", MatrixIdentity, IdempotentPair,
            "(ABA)^k + (BAB)^k = (A + B) N^2k = N^2k (A + B)", w13)
            .swept(),
        Entry::new("tk33s1", MatrixIdentity, IdempotentPair,
            "sum of (AB)^j - (BA)^j telescopes through the odd powers of N", tk33s1)
            .swept(),
        Entry::new("tk33s2", MatrixIdentity, IdempotentPair,
            "sum of (AB)^j + (BA)^j telescopes through the odd powers of N", tk33s2)
            .swept(),
        Entry::new("tk33s3", MatrixIdentity, IdempotentPair,
            "sum of (ABA)^j - (BAB)^j telescopes through the even powers of N", tk33s3)
            .swept(),
        Entry::new("tk33s4", MatrixIdentity, IdempotentPair,
            "sum of (ABA)^j + (BAB)^j telescopes through the even powers of N", tk33s4)
            .swept(),
        Entry::new("tk34a", SubspaceIdentity, IdempotentPair,
            "R((AB - BA)^k) lies within R((A - B)^k) and within R(N^k)", tk34a)
            .swept(),
        Entry::new("tk34b", SubspaceIdentity, IdempotentPair,
            "R((AB + BA)^k) lies within R((A + B)^k) and within R(N^k)", tk34b)
            .swept(),
        Entry::new("tk34c", SubspaceIdentity, IdempotentPair,
            "N((A - B)^k) and N(N^k) lie within N((AB - BA)^k)", tk34c)
            .swept(),
        Entry::new("tk34d", SubspaceIdentity, IdempotentPair,
            "N((A + B)^k) and N(N^k) lie within N((AB + BA)^k)", tk34d)
            .swept(),
        Entry::new("w24", MatrixIdentity, IdempotentPair,
            "(AB - BA)^D = -(A - B)^D N^D = N^D (A - B)^D", w24)
            .noted("the printed minus sits on the other factor order; a 2 x 2 pair \
                    already separates the two readings")
            .with_literal(w24_literal),
        Entry::new("w25", MatrixIdentity, IdempotentPair,
            "(AB + BA)^D = (A + B)^D N^D = N^D (A + B)^D", w25),
        Entry::new("w26", MatrixIdentity, IdempotentPair,
            "((AB)^k - (BA)^k)^D = -(A - B)^D (N^D)^(2k-1) = (N^D)^(2k-1) (A - B)^D", w26)
            .swept()
            .noted("same sign placement as the unpowered commutator line; the minus \
                    belongs on the (A - B)^D-first product")
            .with_literal(w26_literal),
        Entry::new("w27", MatrixIdentity, IdempotentPair,
            "((AB)^k + (BA)^k)^D = (A + B)^D (N^D)^(2k-1) = (N^D)^(2k-1) (A + B)^D", w27)
            .swept(),
        Entry::new("w28", MatrixIdentity, IdempotentPair,
            "((ABA)^k - (BAB)^k)^D = (A - B)^D (N^D)^2k = (N^D)^2k (A - B)^D", w28)
            .swept(),
        Entry::new("w29", MatrixIdentity, IdempotentPair,
            "((ABA)^k + (BAB)^k)^D = (A + B)^D (N^D)^2k = (N^D)^2k (A + B)^D", w29)
            .swept(),
        Entry::new("w32", MatrixIdentity, IdempotentPair,
            "A - ABA = A (A - B)^2 = (A - B)^2 A", w32),
        Entry::new("w33", MatrixIdentity, IdempotentPair,
            "B - BAB = B (A - B)^2 = (A - B)^2 B", w33),
        Entry::new("w34", MatrixIdentity, IdempotentPair,
            "(A - ABA)^k = A (A - B)^2k = (A - B)^2k A", w34)
            .swept(),
        Entry::new("w35", MatrixIdentity, IdempotentPair,
            "(B - BAB)^k = B (A - B)^2k = (A - B)^2k B", w35)
            .swept(),
        Entry::new("w36", MatrixIdentity, IdempotentPair,
            "ABA = A N^2 = N^2 A", w36),
        Entry::new("w37", MatrixIdentity, IdempotentPair,
            "BAB = B N^2 = N^2 B", w37),
        Entry::new("w38", MatrixIdentity, IdempotentPair,
            "(ABA)^k = A N^2k = N^2k A", w38)
            .swept(),
        Entry::new("w39", MatrixIdentity, IdempotentPair,
            "(BAB)^k = B N^2k = N^2k B", w39)
            .swept(),
        Entry::new("w40", MatrixIdentity, IdempotentPair,
            "(BA)^2 = BA N^2 = B N^2 A", w40),
        Entry::new("w41", MatrixIdentity, IdempotentPair,
            "(AB)^2 = AB N^2 = A N^2 B", w41),
        Entry::new("w42", MatrixIdentity, IdempotentPair,
            "(AB)^k = A N^(2k-2) B = A N^(2k-1) B", w42)
            .swept()
            .noted("the printed exponent k first fails at k = 3; the sandwich needs \
                    2k - 2 (equivalently 2k - 1) factors of N")
            .with_literal(w42_literal),
        Entry::new("w43", MatrixIdentity, IdempotentPair,
            "(BA)^k = B N^(2k-2) A = B N^(2k-1) A", w43)
            .swept()
            .noted("mirror of the (AB)^k sandwich, with the same printed exponent slip")
            .with_literal(w43_literal),
        Entry::new("w44", MatrixIdentity, IdempotentPair,
            "(A - ABA)^D = A ((A - B)^D)^2 = ((A - B)^D)^2 A", w44),
        Entry::new("w45", MatrixIdentity, IdempotentPair,
            "(B - BAB)^D = B ((A - B)^D)^2 = ((A - B)^D)^2 B", w45),
        Entry::new("w46", MatrixIdentity, IdempotentPair,
            "(ABA)^D = A (N^D)^2 = (N^D)^2 A", w46),
        Entry::new("w47", MatrixIdentity, IdempotentPair,
            "(BAB)^D = B (N^D)^2 = (N^D)^2 B", w47),
    ]
}
