//! Foundational rank formulas for general matrices, the three solution-space
//! expansion formulas, and the projector rank-additivity lemma.

use super::*;
use crate::geninv::projector_triple;

pub(crate) fn ri(m: &Matrix) -> i64 {
    m.rank() as i64
}

fn hh21(inst: &Instance, _p: &Params) -> Outcome {
    let a = inst.single();
    let m = a.rows() as i64;
    let id = eye(a.rows(), a.field());
    let a2 = a.mul(a).expect("square");
    check_eq_all(&[
        ("r(I - A^2)", ri(&(&id - &a2))),
        ("r(I + A) + r(I - A) - m", ri(&(&id + a)) + ri(&(&id - a)) - m),
    ])
}

fn hh22_signed(inst: &Instance, plus: bool) -> Outcome {
    let a = inst.single();
    let m = a.rows() as i64;
    let id = eye(a.rows(), a.field());
    let a2 = a.mul(a).expect("square");
    let (lhs, shifted) = if plus { (a + &a2, &id + a) } else { (a - &a2, &id - a) };
    check_eq_all(&[
        ("r(A +- A^2)", ri(&lhs)),
        ("r(A) + r(I +- A) - m", ri(a) + ri(&shifted) - m),
    ])
}

fn hh22p(inst: &Instance, _p: &Params) -> Outcome {
    hh22_signed(inst, true)
}

fn hh22m(inst: &Instance, _p: &Params) -> Outcome {
    hh22_signed(inst, false)
}

fn hh23_signed(inst: &Instance, plus: bool) -> Outcome {
    let a = inst.single();
    let m = a.rows() as i64;
    let id = eye(a.rows(), a.field());
    let a2 = a.mul(a).expect("square");
    let a3 = a2.mul(a).expect("square");
    let (lhs, shifted) = if plus { (a + &a3, &id + &a2) } else { (a - &a3, &id - &a2) };
    check_eq_all(&[
        ("r(A +- A^3)", ri(&lhs)),
        ("r(A) + r(I +- A^2) - m", ri(a) + ri(&shifted) - m),
    ])
}

fn hh23p(inst: &Instance, _p: &Params) -> Outcome {
    hh23_signed(inst, true)
}

fn hh23m(inst: &Instance, _p: &Params) -> Outcome {
    hh23_signed(inst, false)
}

fn hh24_signed(inst: &Instance, plus: bool) -> Outcome {
    let a = inst.single();
    let m = a.rows() as i64;
    let id = eye(a.rows(), a.field());
    let shifted = if plus { &id + a } else { &id - a };
    let sq = shifted.mul(&shifted).expect("square");
    check_eq_all(&[
        ("r(A (I +- A)^2)", ri(&a.mul(&sq).expect("square"))),
        ("r(A) + r((I +- A)^2) - m", ri(a) + ri(&sq) - m),
    ])
}

fn hh24p(inst: &Instance, _p: &Params) -> Outcome {
    hh24_signed(inst, true)
}

fn hh24m(inst: &Instance, _p: &Params) -> Outcome {
    hh24_signed(inst, false)
}

fn hh25(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b) = inst.pair();
    let (m, n) = (a.rows() as i64, a.cols() as i64);
    let im = eye(a.rows(), a.field());
    let in_ = eye(a.cols(), a.field());
    let ab = a.mul(b).expect("conformable");
    let ba = b.mul(a).expect("conformable");
    check_eq_all(&[
        ("r(I_m - AB) + n", ri(&(&im - &ab)) + n),
        ("r(I_n - BA) + m", ri(&(&in_ - &ba)) + m),
    ])
}

fn hh27(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, x, y) = inst.quad();
    let axbya = a
        .mul(x)
        .and_then(|t| t.mul(b))
        .and_then(|t| t.mul(y))
        .and_then(|t| t.mul(a))
        .expect("conformable");
    let byaxb = b
        .mul(y)
        .and_then(|t| t.mul(a))
        .and_then(|t| t.mul(x))
        .and_then(|t| t.mul(b))
        .expect("conformable");
    check_eq_all(&[
        ("r(A - AXBYA) + r(B)", ri(&(a - &axbya)) + ri(b)),
        ("r(B - BYAXB) + r(A)", ri(&(b - &byaxb)) + ri(a)),
    ])
}

fn hh28(inst: &Instance, _p: &Params) -> Outcome {
    let (p, q) = inst.pair();
    let m = p.rows() as i64;
    let id = eye(p.rows(), p.field());
    let lhs = &(&(&id - p) - q) + &q.mul(p).expect("square");
    check_eq_all(&[
        ("r(I - P - Q + QP)", ri(&lhs)),
        ("m - r(P) - r(Q) + r(PQ)", m - ri(p) - ri(q) + ri(&p.mul(q).expect("square"))),
    ])
}

/// The shared expansion shape of the three solution-space theorems.
fn difference_expansion(x: &Matrix, y: &Matrix) -> Outcome {
    check_eq_all(&[
        ("r(X - Y)", ri(&(x - y))),
        (
            "r([X; Y]) + r([X, Y]) - r(X) - r(Y)",
            ri(&col(&[x, y])) + ri(&row(&[x, y])) - ri(x) - ri(y),
        ),
    ])
}

fn z2(inst: &Instance, _p: &Params) -> Outcome {
    let (_, x, y) = inst.fixed_point();
    difference_expansion(x, y)
}

fn z9(inst: &Instance, _p: &Params) -> Outcome {
    let (_, _, x, y) = inst.quad();
    difference_expansion(x, y)
}

fn z12(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, x, y) = inst.quad();
    let ay = a.mul(y).expect("square");
    let bx = b.mul(x).expect("square");
    check_eq_all(&[
        ("r([AY, BX])", ri(&row(&[&ay, &bx]))),
        (
            "r([X, Y]) + r(AY) + r(BX) - r(X) - r(Y)",
            ri(&row(&[x, y])) + ri(&ay) + ri(&bx) - ri(x) - ri(y),
        ),
    ])
}

fn k42(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, c) = inst.triple();
    let (_, e, f) = projector_triple(a);
    let eb = e.mul(b).expect("conformable");
    let cf = c.mul(&f).expect("conformable");
    let columns = check_eq_all(&[
        ("r([A, B])", ri(&row(&[a, b]))),
        ("r(A) + r(E_A B)", ri(a) + ri(&eb)),
    ]);
    if !matches!(columns, Outcome::Pass) {
        return columns;
    }
    check_eq_all(&[
        ("r([A; C])", ri(&col(&[a, c]))),
        ("r(A) + r(C F_A)", ri(a) + ri(&cf)),
    ])
}

fn w75(inst: &Instance, _p: &Params) -> Outcome {
    let (m_mat, n_mat) = inst.pair();
    let basis = match m_mat.range_intersection_basis(n_mat) {
        Ok(b) => b,
        Err(e) => return fail("intersection basis", "-", format!("{e}")),
    };
    check_eq_all(&[
        ("dim(R(M) meet R(N))", ri(&basis)),
        ("r(M) + r(N) - r([M, N])", ri(m_mat) + ri(n_mat) - ri(&row(&[m_mat, n_mat]))),
    ])
}

pub(super) fn entries() -> Vec<Entry> {
    use CheckerKind::*;
    use InputClass::*;
    vec![
        Entry::new("hh21", RankEquality, GeneralSquare,
            "r(I - A^2) = r(I + A) + r(I - A) - m for square A", hh21),
        Entry::new("hh22p", RankEquality, GeneralSquare,
            "r(A + A^2) = r(A) + r(I + A) - m for square A", hh22p),
        Entry::new("hh22m", RankEquality, GeneralSquare,
            "r(A - A^2) = r(A) + r(I - A) - m for square A", hh22m),
        Entry::new("hh23p", RankEquality, GeneralSquare,
            "r(A + A^3) = r(A) + r(I + A^2) - m for square A", hh23p),
        Entry::new("hh23m", RankEquality, GeneralSquare,
            "r(A - A^3) = r(A) + r(I - A^2) - m for square A", hh23m),
        Entry::new("hh24p", RankEquality, GeneralSquare,
            "r(A (I + A)^2) = r(A) + r((I + A)^2) - m for square A", hh24p),
        Entry::new("hh24m", RankEquality, GeneralSquare,
            "r(A (I - A)^2) = r(A) + r((I - A)^2) - m for square A", hh24m),
        Entry::new("hh25", RankEquality, TransposedPair,
            "r(I_m - AB) + n = r(I_n - BA) + m", hh25),
        Entry::new("hh27", RankEquality, CrossedQuad,
            "r(A - AXBYA) + r(B) = r(B - BYAXB) + r(A)", hh27),
        Entry::new("hh28", RankEquality, IdempotentPair,
            "r(I - P - Q + QP) = m - r(P) - r(Q) + r(PQ) for idempotent P, Q", hh28)
            .noted("source line opens a bracket it never closes; checked with the \
                    left side read as r(I - P - Q + QP)"),
        Entry::new("z2", RankEquality, FixedPointSystem,
            "under MX = X, YM = Y, MY = XM: r(X - Y) = r([X; Y]) + r([X, Y]) - r(X) - r(Y)",
            z2),
        Entry::new("z9", RankEquality, IntertwineSystem,
            "under AX = X, YB = Y, AY = XB: r(X - Y) = r([X; Y]) + r([X, Y]) - r(X) - r(Y)",
            z9),
        Entry::new("z12", RankEquality, RangeChainSystem,
            "under AX = X, BY = Y and range containments: r([AY, BX]) = r([X, Y]) + r(AY) + \
             r(BX) - r(X) - r(Y)",
            z12),
        Entry::new("k42", RankEquality, RectCross,
            "r([A, B]) = r(A) + r(E_A B) and r([A; C]) = r(A) + r(C F_A)", k42),
        Entry::new("w75", RankEquality, RectPair,
            "dim(R(M) meet R(N)) = r(M) + r(N) - r([M, N]), intersection built explicitly",
            w75),
    ]
}
