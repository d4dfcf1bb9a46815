//! The twisted decomposition of `I + alpha A + beta B` and the inverse
//! formulas it carries, followed by the three-idempotent material: weighted
//! product identities through `M = A + B + C`, the sum-of-squares quadratics
//! in `M`, their rank and subspace forms, and the per-shift rank splittings
//! at the roots of `x^2 - x - k`.

use super::basics::ri;
use super::*;
use crate::geninv::scale_rat;

fn sq(x: &Matrix) -> Matrix {
    x.mul(x).expect("square")
}

/// `alpha X + beta Y`.
fn wsum(alpha: &ExactScalar, x: &Matrix, beta: &ExactScalar, y: &Matrix) -> Matrix {
    &x.scale(alpha).expect("same field") + &y.scale(beta).expect("same field")
}

/// `alpha A + beta B + gamma C`.
fn wsum3(p: &Params, a: &Matrix, b: &Matrix, c: &Matrix) -> Matrix {
    &wsum(p.alpha(), a, p.beta(), b) + &c.scale(p.gamma()).expect("same field")
}

/// `I + alpha A`.
fn unit_shift(alpha: &ExactScalar, a: &Matrix) -> Matrix {
    &eye(a.rows(), a.field()) + &a.scale(alpha).expect("same field")
}

/// `alpha beta (1 + alpha)^-1 (1 + beta)^-1`, defined whenever neither scalar
/// is `-1`.
fn twist_scalar(alpha: &ExactScalar, beta: &ExactScalar) -> ExactScalar {
    let field = alpha.field();
    let one = ExactScalar::one(field);
    one.add(alpha)
        .and_then(|s| s.inv())
        .and_then(|ia| one.add(beta).and_then(|s| s.inv()).and_then(|ib| ia.mul(&ib)))
        .and_then(|units| alpha.mul(beta).and_then(|ab| ab.mul(&units)))
        .expect("scalars avoid -1")
}

/// `I - lambda X Y` for the twist scalar of the sampled pair.
fn twisted_product(p: &Params, x: &Matrix, y: &Matrix) -> Matrix {
    let lambda = twist_scalar(p.alpha(), p.beta());
    let xy = x.mul(y).expect("square");
    &eye(x.rows(), x.field()) - &xy.scale(&lambda).expect("same field")
}

pub(super) fn th312i1(inst: &Instance, p: &Params) -> Outcome {
    let (a, b) = inst.pair();
    let shifted = &unit_shift(p.alpha(), a) + &b.scale(p.beta()).expect("same field");
    let product = unit_shift(p.alpha(), a)
        .mul(&twisted_product(p, a, b))
        .and_then(|t| t.mul(&unit_shift(p.beta(), b)))
        .expect("square");
    check_mat_chain(&[
        ("I + alpha A + beta B", &shifted),
        ("(I + alpha A)(I - lambda AB)(I + beta B)", &product),
    ])
}

pub(super) fn th312i2(inst: &Instance, p: &Params) -> Outcome {
    let (a, b) = inst.pair();
    let shifted = &unit_shift(p.alpha(), a) + &b.scale(p.beta()).expect("same field");
    let product = unit_shift(p.beta(), b)
        .mul(&twisted_product(p, b, a))
        .and_then(|t| t.mul(&unit_shift(p.alpha(), a)))
        .expect("square");
    check_mat_chain(&[
        ("I + alpha A + beta B", &shifted),
        ("(I + beta B)(I - lambda BA)(I + alpha A)", &product),
    ])
}

pub(super) fn th312ns(inst: &Instance, p: &Params) -> Outcome {
    let (a, b) = inst.pair();
    let m = a.rows();
    let shifted = &unit_shift(p.alpha(), a) + &b.scale(p.beta()).expect("same field");
    check_iff(&[
        ("I - lambda AB nonsingular", twisted_product(p, a, b).rank() == m),
        ("I + alpha A + beta B nonsingular", shifted.rank() == m),
    ])
}

pub(super) fn th312ns_literal(inst: &Instance, p: &Params) -> Outcome {
    let (a, b) = inst.pair();
    let m = a.rows();
    let flipped = &eye(m, a.field()) - &wsum(p.alpha(), a, p.beta(), b);
    check_iff(&[
        ("I - lambda AB nonsingular", twisted_product(p, a, b).rank() == m),
        ("I - alpha A - beta B nonsingular", flipped.rank() == m),
    ])
}

fn th312inv(inst: &Instance, p: &Params, transposed: bool) -> Outcome {
    let (a, b) = inst.pair();
    let shifted = &unit_shift(p.alpha(), a) + &b.scale(p.beta()).expect("same field");
    let middle = match shifted.inverse() {
        Ok(inv) => inv,
        Err(_) => return Outcome::Miss("I + alpha A + beta B is singular"),
    };
    let (x, y, outer_left, outer_right, label) = if transposed {
        (b, a, unit_shift(p.alpha(), a), unit_shift(p.beta(), b),
         "(I + alpha A)(I + alpha A + beta B)^-1 (I + beta B)")
    } else {
        (a, b, unit_shift(p.beta(), b), unit_shift(p.alpha(), a),
         "(I + beta B)(I + alpha A + beta B)^-1 (I + alpha A)")
    };
    let twisted = twisted_product(p, x, y);
    let lhs = twisted.inverse().expect("nonsingular with the middle factor");
    let rhs = outer_left.mul(&middle).and_then(|t| t.mul(&outer_right)).expect("square");
    let head: &str = if transposed { "(I - lambda BA)^-1" } else { "(I - lambda AB)^-1" };
    check_mat_chain(&[(head, &lhs), (label, &rhs)])
}

pub(super) fn th312inv1(inst: &Instance, p: &Params) -> Outcome {
    th312inv(inst, p, false)
}

pub(super) fn th312inv2(inst: &Instance, p: &Params) -> Outcome {
    th312inv(inst, p, true)
}

/// Shared parts of a square triple: the members, `I`, `M`, and `M - I`.
fn triple_parts(inst: &Instance) -> (&Matrix, &Matrix, &Matrix, Matrix, Matrix) {
    let (a, b, c) = inst.triple();
    let id = eye(a.rows(), a.field());
    let m = &(a + b) + c;
    let shifted = &m - &id;
    (a, b, c, m, shifted)
}

fn prod(x: &Matrix, y: &Matrix) -> Matrix {
    x.mul(y).expect("square")
}

fn th397(inst: &Instance, p: &Params) -> Outcome {
    let (a, b, c, _, shifted) = triple_parts(inst);
    let lhs = &(&(&prod(a, b) + &prod(a, c)).scale(p.alpha()).expect("same field")
        + &(&prod(b, a) + &prod(b, c)).scale(p.beta()).expect("same field"))
        + &(&prod(c, a) + &prod(c, b)).scale(p.gamma()).expect("same field");
    check_mat_chain(&[
        ("alpha(AB + AC) + beta(BA + BC) + gamma(CA + CB)", &lhs),
        ("(alpha A + beta B + gamma C)(M - I)", &prod(&wsum3(p, a, b, c), &shifted)),
    ])
}

fn th398(inst: &Instance, p: &Params) -> Outcome {
    let (a, b, c, _, shifted) = triple_parts(inst);
    let lhs = &(&(&prod(b, a) + &prod(c, a)).scale(p.alpha()).expect("same field")
        + &(&prod(a, b) + &prod(c, b)).scale(p.beta()).expect("same field"))
        + &(&prod(a, c) + &prod(b, c)).scale(p.gamma()).expect("same field");
    check_mat_chain(&[
        ("alpha(BA + CA) + beta(AB + CB) + gamma(AC + BC)", &lhs),
        ("(M - I)(alpha A + beta B + gamma C)", &prod(&shifted, &wsum3(p, a, b, c))),
    ])
}

fn th399(inst: &Instance, p: &Params) -> Outcome {
    let (a, b, c, _, shifted) = triple_parts(inst);
    let ab = p.alpha().add(p.beta()).expect("same field");
    let ac = p.alpha().add(p.gamma()).expect("same field");
    let bc = p.beta().add(p.gamma()).expect("same field");
    let lhs = &(&(&prod(a, b) + &prod(b, a)).scale(&ab).expect("same field")
        + &(&prod(a, c) + &prod(c, a)).scale(&ac).expect("same field"))
        + &(&prod(b, c) + &prod(c, b)).scale(&bc).expect("same field");
    let weighted = wsum3(p, a, b, c);
    check_mat_chain(&[
        ("(alpha + beta)(AB + BA) + (alpha + gamma)(AC + CA) + (beta + gamma)(BC + CB)", &lhs),
        ("W(M - I) + (M - I)W", &(&prod(&weighted, &shifted) + &prod(&shifted, &weighted))),
    ])
}

fn th3100(inst: &Instance, p: &Params) -> Outcome {
    let (a, b, c, m, _) = triple_parts(inst);
    let ab = p.alpha().sub(p.beta()).expect("same field");
    let ac = p.alpha().sub(p.gamma()).expect("same field");
    let bc = p.beta().sub(p.gamma()).expect("same field");
    let lhs = &(&(&prod(a, b) - &prod(b, a)).scale(&ab).expect("same field")
        + &(&prod(a, c) - &prod(c, a)).scale(&ac).expect("same field"))
        + &(&prod(b, c) - &prod(c, b)).scale(&bc).expect("same field");
    let weighted = wsum3(p, a, b, c);
    check_mat_chain(&[
        ("(alpha - beta)(AB - BA) + (alpha - gamma)(AC - CA) + (beta - gamma)(BC - CB)", &lhs),
        ("WM - MW", &(&prod(&weighted, &m) - &prod(&m, &weighted))),
    ])
}

fn th3100a(inst: &Instance, p: &Params) -> Outcome {
    let (a, b, c, _, shifted) = triple_parts(inst);
    let conjugated = |outer: &Matrix, core: &Matrix| -> Matrix {
        outer.mul(core).and_then(|t| t.mul(outer)).expect("square")
    };
    let lhs = &(&conjugated(&(b + c), a).scale(p.alpha()).expect("same field")
        + &conjugated(&(a + c), b).scale(p.beta()).expect("same field"))
        + &conjugated(&(a + b), c).scale(p.gamma()).expect("same field");
    let weighted = wsum3(p, a, b, c);
    check_mat_chain(&[
        ("alpha(B + C)A(B + C) + beta(A + C)B(A + C) + gamma(A + B)C(A + B)", &lhs),
        (
            "(M - I)(alpha A + beta B + gamma C)(M - I)",
            &shifted.mul(&weighted).and_then(|t| t.mul(&shifted)).expect("square"),
        ),
    ])
}

/// `(A + B)^2 + (A + C)^2 + (B + C)^2`.
fn sum_squares_plus(a: &Matrix, b: &Matrix, c: &Matrix) -> Matrix {
    &(&sq(&(a + b)) + &sq(&(a + c))) + &sq(&(b + c))
}

/// `(A - B)^2 + (A - C)^2 + (B - C)^2`.
fn sum_squares_minus(a: &Matrix, b: &Matrix, c: &Matrix) -> Matrix {
    &(&sq(&(a - b)) + &sq(&(a - c))) + &sq(&(b - c))
}

/// `AB + BA + AC + CA + BC + CB`.
fn pairwise_sum(a: &Matrix, b: &Matrix, c: &Matrix) -> Matrix {
    &(&(&prod(a, b) + &prod(b, a)) + &(&prod(a, c) + &prod(c, a)))
        + &(&prod(b, c) + &prod(c, b))
}

fn th3106(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, c, m, _) = triple_parts(inst);
    let id = eye(a.rows(), a.field());
    check_mat_chain(&[
        ("(A + B)^2 + (A + C)^2 + (B + C)^2", &sum_squares_plus(a, b, c)),
        ("M(I + M)", &prod(&m, &(&id + &m))),
    ])
}

fn th3107(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, c, m, _) = triple_parts(inst);
    let id = eye(a.rows(), a.field());
    let recentred = &m - &scale_rat(&id, 3, 2);
    check_mat_chain(&[
        ("(A - B)^2 + (A - C)^2 + (B - C)^2", &sum_squares_minus(a, b, c)),
        ("M(3I - M)", &prod(&m, &(&scale_rat(&id, 3, 1) - &m))),
        ("9/4 I - (M - 3/2 I)^2", &(&scale_rat(&id, 9, 4) - &sq(&recentred))),
    ])
}

fn th3108(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, c, m, shifted) = triple_parts(inst);
    let id = eye(a.rows(), a.field());
    let recentred = &m - &scale_rat(&id, 1, 2);
    check_mat_chain(&[
        ("AB + BA + AC + CA + BC + CB", &pairwise_sum(a, b, c)),
        ("M(M - I)", &prod(&m, &shifted)),
        ("(M - I/2)^2 - I/4", &(&sq(&recentred) - &scale_rat(&id, 1, 4))),
    ])
}

fn th3109(inst: &Instance, p: &Params) -> Outcome {
    let (a, b, c, m, shifted) = triple_parts(inst);
    let k = p.k;
    check_mat_chain(&[
        ("(AB + BA + AC + CA + BC + CB)^k", &pairwise_sum(a, b, c).pow(k).expect("square")),
        (
            "M^k (M - I)^k",
            &prod(&m.pow(k).expect("square"), &shifted.pow(k).expect("square")),
        ),
    ])
}

fn th3110(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, c, m, _) = triple_parts(inst);
    let dim = a.rows() as i64;
    let id = eye(a.rows(), a.field());
    let grown = &id + &m;
    let meet = m.range_intersection_dim(&grown).expect("same rows") as i64;
    check_eq_all(&[
        ("r((A + B)^2 + (A + C)^2 + (B + C)^2)", ri(&sum_squares_plus(a, b, c))),
        ("r(M) + r(I + M) - m", ri(&m) + ri(&grown) - dim),
        ("dim(R(M) meet R(I + M))", meet),
    ])
}

fn th3111(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, c, m, _) = triple_parts(inst);
    let dim = a.rows() as i64;
    let id = eye(a.rows(), a.field());
    let mirrored = &scale_rat(&id, 3, 1) - &m;
    let meet = m.range_intersection_dim(&mirrored).expect("same rows") as i64;
    check_eq_all(&[
        ("r((A - B)^2 + (A - C)^2 + (B - C)^2)", ri(&sum_squares_minus(a, b, c))),
        ("r(M) + r(3I - M) - m", ri(&m) + ri(&mirrored) - dim),
        ("dim(R(M) meet R(3I - M))", meet),
    ])
}

/// `(sqrt(4k + 1) + 1)/2` or `(sqrt(4k + 1) - 1)/2`: rational when `4k + 1`
/// is a perfect square, a field root otherwise.
fn root_shift(k: i64, plus: bool, field: FieldSpec) -> ExactScalar {
    let t = (4 * k + 1) as u64;
    let sign = if plus { 1 } else { -1 };
    match t {
        1 | 9 | 25 => {
            let s = match t {
                1 => 1,
                9 => 3,
                _ => 5,
            };
            ExactScalar::from_rat(rat(s + sign, 2), field)
        }
        _ => {
            assert_eq!(field.radicand(), t, "entry pins the field of sqrt(4k + 1)");
            ExactScalar::from_components(rat(sign, 2), rat(0, 1), rat(1, 2), rat(0, 1), field)
                .expect("field carries the root")
        }
    }
}

/// The two split factors of `kI - (AB + ... + CB)`: `((sqrt(4k+1) + 1)/2)I - M`
/// and `((sqrt(4k+1) - 1)/2)I + M`.
fn split_factors(m: &Matrix, k: i64) -> (Matrix, Matrix) {
    let field = m.field();
    let dim = m.rows();
    let upper = Matrix::scalar_identity(dim, &root_shift(k, true, field));
    let lower = Matrix::scalar_identity(dim, &root_shift(k, false, field));
    (&upper - m, &lower + m)
}

fn rank_split(inst: &Instance, k: i64) -> Outcome {
    let (a, b, c, m, _) = triple_parts(inst);
    let dim = a.rows() as i64;
    let id = eye(a.rows(), a.field());
    let shifted = &id.scale(&ExactScalar::from_int(k, a.field())).expect("same field")
        - &pairwise_sum(a, b, c);
    let (upper, lower) = split_factors(&m, k);
    check_eq_all(&[
        ("r(kI - AB - BA - AC - CA - BC - CB)", ri(&shifted)),
        (
            "r(((sqrt(4k+1) + 1)/2)I - M) + r(((sqrt(4k+1) - 1)/2)I + M) - m",
            ri(&upper) + ri(&lower) - dim,
        ),
    ])
}

fn th3112k0(inst: &Instance, _p: &Params) -> Outcome {
    rank_split(inst, 0)
}

fn th3112k1(inst: &Instance, _p: &Params) -> Outcome {
    rank_split(inst, 1)
}

fn th3112k2(inst: &Instance, _p: &Params) -> Outcome {
    rank_split(inst, 2)
}

fn th3112k3(inst: &Instance, _p: &Params) -> Outcome {
    rank_split(inst, 3)
}

fn th3112k4(inst: &Instance, _p: &Params) -> Outcome {
    rank_split(inst, 4)
}

fn th3112k5(inst: &Instance, _p: &Params) -> Outcome {
    rank_split(inst, 5)
}

fn th3112k6(inst: &Instance, _p: &Params) -> Outcome {
    rank_split(inst, 6)
}

fn th3112a(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, c, m, _) = triple_parts(inst);
    let id = eye(a.rows(), a.field());
    check_range_intersection(
        "R((A + B)^2 + (A + C)^2 + (B + C)^2)",
        &sum_squares_plus(a, b, c),
        &m,
        &(&id + &m),
    )
}

fn th3112b(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, c, m, _) = triple_parts(inst);
    let id = eye(a.rows(), a.field());
    check_range_intersection(
        "R((A - B)^2 + (A - C)^2 + (B - C)^2)",
        &sum_squares_minus(a, b, c),
        &m,
        &(&scale_rat(&id, 3, 1) - &m),
    )
}

fn th3112c(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, c, m, _) = triple_parts(inst);
    let id = eye(a.rows(), a.field());
    check_range_intersection(
        "R(AB + BA + AC + CA + BC + CB)",
        &pairwise_sum(a, b, c),
        &m,
        &(&id - &m),
    )
}

fn th3112d(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, c, m, _) = triple_parts(inst);
    let id = eye(a.rows(), a.field());
    check_null_sum("(A + B)^2 + (A + C)^2 + (B + C)^2", &sum_squares_plus(a, b, c), &m, &(&id + &m))
}

fn th3112d_literal(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, c, m, _) = triple_parts(inst);
    let id = eye(a.rows(), a.field());
    check_null_intersection(
        "(A + B)^2 + (A + C)^2 + (B + C)^2",
        &sum_squares_plus(a, b, c),
        &m,
        &(&id + &m),
    )
}

fn th3112e(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, c, m, _) = triple_parts(inst);
    let id = eye(a.rows(), a.field());
    check_null_sum(
        "(A - B)^2 + (A - C)^2 + (B - C)^2",
        &sum_squares_minus(a, b, c),
        &m,
        &(&scale_rat(&id, 3, 1) - &m),
    )
}

fn th3112e_literal(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, c, m, _) = triple_parts(inst);
    let id = eye(a.rows(), a.field());
    check_null_intersection(
        "(A - B)^2 + (A - C)^2 + (B - C)^2",
        &sum_squares_minus(a, b, c),
        &m,
        &(&scale_rat(&id, 3, 1) - &m),
    )
}

fn th3112f(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, c, m, _) = triple_parts(inst);
    let id = eye(a.rows(), a.field());
    check_null_sum("AB + BA + AC + CA + BC + CB", &pairwise_sum(a, b, c), &m, &(&id - &m))
}

fn th3112f_literal(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, c, m, _) = triple_parts(inst);
    let id = eye(a.rows(), a.field());
    check_null_intersection("AB + BA + AC + CA + BC + CB", &pairwise_sum(a, b, c), &m, &(&id - &m))
}

fn th313a(inst: &Instance, p: &Params) -> Outcome {
    let (a, b, c, m, shifted) = triple_parts(inst);
    let weighted = wsum3(p, a, b, c);
    let pairs = [
        (
            "alpha(AB + AC) + beta(BA + BC) + gamma(CA + CB) = 0 iff W(M - I) = 0",
            &(&(&prod(a, b) + &prod(a, c)).scale(p.alpha()).expect("same field")
                + &(&prod(b, a) + &prod(b, c)).scale(p.beta()).expect("same field"))
                + &(&prod(c, a) + &prod(c, b)).scale(p.gamma()).expect("same field"),
            prod(&weighted, &shifted),
        ),
        (
            "alpha(BA + CA) + beta(AB + CB) + gamma(AC + BC) = 0 iff (M - I)W = 0",
            &(&(&prod(b, a) + &prod(c, a)).scale(p.alpha()).expect("same field")
                + &(&prod(a, b) + &prod(c, b)).scale(p.beta()).expect("same field"))
                + &(&prod(a, c) + &prod(b, c)).scale(p.gamma()).expect("same field"),
            prod(&shifted, &weighted),
        ),
    ];
    for (label, lhs, rhs) in &pairs {
        if lhs.is_zero() != rhs.is_zero() {
            return fail(*label, "one side vanishes, the other does not", "equivalence fails");
        }
    }
    let ab = p.alpha().add(p.beta()).expect("same field");
    let ac = p.alpha().add(p.gamma()).expect("same field");
    let bc = p.beta().add(p.gamma()).expect("same field");
    let sym = &(&(&prod(a, b) + &prod(b, a)).scale(&ab).expect("same field")
        + &(&prod(a, c) + &prod(c, a)).scale(&ac).expect("same field"))
        + &(&prod(b, c) + &prod(c, b)).scale(&bc).expect("same field");
    let sym_rhs = &prod(&weighted, &shifted) + &prod(&shifted, &weighted);
    let abd = p.alpha().sub(p.beta()).expect("same field");
    let acd = p.alpha().sub(p.gamma()).expect("same field");
    let bcd = p.beta().sub(p.gamma()).expect("same field");
    let skew = &(&(&prod(a, b) - &prod(b, a)).scale(&abd).expect("same field")
        + &(&prod(a, c) - &prod(c, a)).scale(&acd).expect("same field"))
        + &(&prod(b, c) - &prod(c, b)).scale(&bcd).expect("same field");
    let conjugated = |outer: &Matrix, core: &Matrix| -> Matrix {
        outer.mul(core).and_then(|t| t.mul(outer)).expect("square")
    };
    let sandwiched = &(&conjugated(&(b + c), a).scale(p.alpha()).expect("same field")
        + &conjugated(&(a + c), b).scale(p.beta()).expect("same field"))
        + &conjugated(&(a + b), c).scale(p.gamma()).expect("same field");
    let sandwiched_rhs =
        shifted.mul(&weighted).and_then(|t| t.mul(&shifted)).expect("square");
    let tail = [
        (
            "symmetric weighted sum = 0 iff W(M - I) + (M - I)W = 0",
            sym.is_zero() == sym_rhs.is_zero(),
        ),
        (
            "skew weighted sum = 0 iff WM = MW",
            skew.is_zero() == (prod(&weighted, &m) == prod(&m, &weighted)),
        ),
        (
            "conjugated weighted sum = 0 iff (M - I)W(M - I) = 0",
            sandwiched.is_zero() == sandwiched_rhs.is_zero(),
        ),
    ];
    for (label, ok) in tail {
        if !ok {
            return fail(label, "one side vanishes, the other does not", "equivalence fails");
        }
    }
    Outcome::Pass
}

/// The six constant-target clauses of the squared-sum dictionary; `fourth_rhs`
/// selects the right side the fourth clause compares against.
fn squared_sum_dictionary(inst: &Instance, fourth_num: i64, fourth_den: i64) -> Outcome {
    let (a, b, c, m, _) = triple_parts(inst);
    let id = eye(a.rows(), a.field());
    let plus = sum_squares_plus(a, b, c);
    let minus = sum_squares_minus(a, b, c);
    let msq = sq(&m);
    let recentred = sq(&(&m.scale(&ExactScalar::from_int(2, a.field())).expect("same field")
        - &scale_rat(&id, 3, 1)));
    let clauses = [
        ("sum of squares of sums = 0 iff M^2 + M = 0", plus.is_zero(), (&msq + &m).is_zero()),
        (
            "sum of squares of sums = I iff M^2 + M = I",
            plus == id,
            &msq + &m == id,
        ),
        (
            "sum of squares of differences = 0 iff (2M - 3I)^2 = 9I",
            minus.is_zero(),
            recentred == scale_rat(&id, 9, 1),
        ),
        (
            "sum of squares of differences = 9/8 I iff (2M - 3I)^2 = (9/2)I",
            minus == scale_rat(&id, 9, 8),
            recentred == scale_rat(&id, fourth_num, fourth_den),
        ),
        (
            "sum of squares of differences = 3I iff (2M - 3I)^2 = -3I",
            minus == scale_rat(&id, 3, 1),
            recentred == scale_rat(&id, -3, 1),
        ),
        (
            "sum of squares of differences = 9/4 I iff (2M - 3I)^2 = 0",
            minus == scale_rat(&id, 9, 4),
            recentred.is_zero(),
        ),
    ];
    for (label, lhs, rhs) in clauses {
        if lhs != rhs {
            return fail(label, "one side holds, the other does not", "equivalence fails");
        }
    }
    Outcome::Pass
}

fn th313b(inst: &Instance, _p: &Params) -> Outcome {
    squared_sum_dictionary(inst, 9, 2)
}

fn th313b_literal(inst: &Instance, _p: &Params) -> Outcome {
    squared_sum_dictionary(inst, 9, 1)
}

fn th313b7(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, c, m, _) = triple_parts(inst);
    let id = eye(a.rows(), a.field());
    let pairwise = pairwise_sum(a, b, c);
    let recentred = sq(&(&id - &m.scale(&ExactScalar::from_int(2, a.field())).expect("same field")));
    for k in 0..=6 {
        let lhs = pairwise == scale_rat(&id, k, 1);
        let rhs = recentred == scale_rat(&id, 4 * k + 1, 1);
        if lhs != rhs {
            return fail(
                format!("pairwise product sum = {k} I"),
                format!("(I - 2M)^2 = {} I", 4 * k + 1),
                "equivalence fails",
            );
        }
    }
    Outcome::Pass
}

fn th313cns(inst: &Instance, p: &Params) -> Outcome {
    let (a, b, c, _, shifted) = triple_parts(inst);
    let dim = a.rows();
    let weighted = wsum3(p, a, b, c);
    let conjugated = |outer: &Matrix, core: &Matrix| -> Matrix {
        outer.mul(core).and_then(|t| t.mul(outer)).expect("square")
    };
    let left = &(&(&prod(a, b) + &prod(a, c)).scale(p.alpha()).expect("same field")
        + &(&prod(b, a) + &prod(b, c)).scale(p.beta()).expect("same field"))
        + &(&prod(c, a) + &prod(c, b)).scale(p.gamma()).expect("same field");
    let right = &(&(&prod(b, a) + &prod(c, a)).scale(p.alpha()).expect("same field")
        + &(&prod(a, b) + &prod(c, b)).scale(p.beta()).expect("same field"))
        + &(&prod(a, c) + &prod(b, c)).scale(p.gamma()).expect("same field");
    let sandwiched = &(&conjugated(&(b + c), a).scale(p.alpha()).expect("same field")
        + &conjugated(&(a + c), b).scale(p.beta()).expect("same field"))
        + &conjugated(&(a + b), c).scale(p.gamma()).expect("same field");
    check_iff(&[
        ("alpha(AB + AC) + beta(BA + BC) + gamma(CA + CB) nonsingular", left.rank() == dim),
        ("alpha(BA + CA) + beta(AB + CB) + gamma(AC + BC) nonsingular", right.rank() == dim),
        ("alpha(B + C)A(B + C) + beta(A + C)B(A + C) + gamma(A + B)C(A + B) nonsingular",
            sandwiched.rank() == dim),
        ("W and M - I both nonsingular",
            weighted.rank() == dim && shifted.rank() == dim),
    ])
}

fn th313cinv(inst: &Instance, p: &Params) -> Outcome {
    let (a, b, c, _, shifted) = triple_parts(inst);
    let weighted = wsum3(p, a, b, c);
    let (wi, si) = match (weighted.inverse(), shifted.inverse()) {
        (Ok(wi), Ok(si)) => (wi, si),
        _ => return Outcome::Miss("needs alpha A + beta B + gamma C and M - I nonsingular"),
    };
    let conjugated = |outer: &Matrix, core: &Matrix| -> Matrix {
        outer.mul(core).and_then(|t| t.mul(outer)).expect("square")
    };
    let left = &(&(&prod(a, b) + &prod(a, c)).scale(p.alpha()).expect("same field")
        + &(&prod(b, a) + &prod(b, c)).scale(p.beta()).expect("same field"))
        + &(&prod(c, a) + &prod(c, b)).scale(p.gamma()).expect("same field");
    let right = &(&(&prod(b, a) + &prod(c, a)).scale(p.alpha()).expect("same field")
        + &(&prod(a, b) + &prod(c, b)).scale(p.beta()).expect("same field"))
        + &(&prod(a, c) + &prod(b, c)).scale(p.gamma()).expect("same field");
    let sandwiched = &(&conjugated(&(b + c), a).scale(p.alpha()).expect("same field")
        + &conjugated(&(a + c), b).scale(p.beta()).expect("same field"))
        + &conjugated(&(a + b), c).scale(p.gamma()).expect("same field");
    let checks = [
        (
            "[alpha(AB + AC) + beta(BA + BC) + gamma(CA + CB)]^-1 = (M - I)^-1 W^-1",
            left.inverse().expect("product of nonsingulars"),
            prod(&si, &wi),
        ),
        (
            "[alpha(BA + CA) + beta(AB + CB) + gamma(AC + BC)]^-1 = W^-1 (M - I)^-1",
            right.inverse().expect("product of nonsingulars"),
            prod(&wi, &si),
        ),
        (
            "conjugated sum inverse = (M - I)^-1 W^-1 (M - I)^-1",
            sandwiched.inverse().expect("product of nonsingulars"),
            si.mul(&wi).and_then(|t| t.mul(&si)).expect("square"),
        ),
    ];
    for (label, lhs, rhs) in &checks {
        if lhs != rhs {
            return fail(*label, "sides differ", "matrices differ");
        }
    }
    Outcome::Pass
}

fn th313d(inst: &Instance, _p: &Params) -> Outcome {
    let (a, b, c, m, _) = triple_parts(inst);
    let dim = a.rows();
    let id = eye(a.rows(), a.field());
    let clauses = [
        (
            "r(sum of squares of sums) = m iff r(M) = r(I + M) = m",
            sum_squares_plus(a, b, c).rank() == dim,
            m.rank() == dim && (&id + &m).rank() == dim,
        ),
        (
            "r(sum of squares of differences) = m iff r(M) = r(3I - M) = m",
            sum_squares_minus(a, b, c).rank() == dim,
            m.rank() == dim && (&scale_rat(&id, 3, 1) - &m).rank() == dim,
        ),
    ];
    for (label, lhs, rhs) in clauses {
        if lhs != rhs {
            return fail(label, "one side holds, the other does not", "equivalence fails");
        }
    }
    Outcome::Pass
}

fn full_rank_split(inst: &Instance, k: i64) -> Outcome {
    let (a, b, c, m, _) = triple_parts(inst);
    let dim = a.rows();
    let id = eye(a.rows(), a.field());
    let shifted = &id.scale(&ExactScalar::from_int(k, a.field())).expect("same field")
        - &pairwise_sum(a, b, c);
    let (upper, lower) = split_factors(&m, k);
    check_iff(&[
        ("r(kI - AB - BA - AC - CA - BC - CB) = m", shifted.rank() == dim),
        (
            "both split factors at the roots of x^2 - x - k have rank m",
            upper.rank() == dim && lower.rank() == dim,
        ),
    ])
}

fn th313dk0(inst: &Instance, _p: &Params) -> Outcome {
    full_rank_split(inst, 0)
}

fn th313dk1(inst: &Instance, _p: &Params) -> Outcome {
    full_rank_split(inst, 1)
}

fn th313dk2(inst: &Instance, _p: &Params) -> Outcome {
    full_rank_split(inst, 2)
}

fn th313dk3(inst: &Instance, _p: &Params) -> Outcome {
    full_rank_split(inst, 3)
}

fn th313dk4(inst: &Instance, _p: &Params) -> Outcome {
    full_rank_split(inst, 4)
}

fn th313dk5(inst: &Instance, _p: &Params) -> Outcome {
    full_rank_split(inst, 5)
}

fn th313dk6(inst: &Instance, _p: &Params) -> Outcome {
    full_rank_split(inst, 6)
}

pub(super) fn entries() -> Vec<Entry> {
    use CheckerKind::*;
    use InputClass::{IdempotentPair, IdempotentTriple};
    vec![
        Entry::new("391", MatrixIdentity, IdempotentPair,
            "I + alpha A + beta B = (I + alpha A)(I - lambda AB)(I + beta B)", th312i1)
            .with_scalars(TWO_SCALARS_UNIT_SAFE),
        Entry::new("392", MatrixIdentity, IdempotentPair,
            "I + alpha A + beta B = (I + beta B)(I - lambda BA)(I + alpha A)", th312i2)
            .with_scalars(TWO_SCALARS_UNIT_SAFE),
        Entry::new("th312ns", FactEquivalence, IdempotentPair,
            "I - lambda AB is nonsingular iff I + alpha A + beta B is", th312ns)
            .with_scalars(TWO_SCALARS_UNIT_SAFE)
            .noted("the second clause is printed as I - alpha A - beta B, whose twist \
                    scalar differs; the factorization two lines up fixes the sign")
            .with_literal(th312ns_literal),
        Entry::new("393", MatrixIdentity, IdempotentPair,
            "(I - lambda AB)^-1 = (I + beta B)(I + alpha A + beta B)^-1 (I + alpha A)",
            th312inv1)
            .with_scalars(TWO_SCALARS_UNIT_SAFE)
            .conditional(),
        Entry::new("394", MatrixIdentity, IdempotentPair,
            "(I - lambda BA)^-1 = (I + alpha A)(I + alpha A + beta B)^-1 (I + beta B)",
            th312inv2)
            .with_scalars(TWO_SCALARS_UNIT_SAFE)
            .conditional(),
        Entry::new("397", MatrixIdentity, IdempotentTriple,
            "alpha(AB + AC) + beta(BA + BC) + gamma(CA + CB) = W(M - I)", th397)
            .with_scalars(THREE_SCALARS),
        Entry::new("398", MatrixIdentity, IdempotentTriple,
            "alpha(BA + CA) + beta(AB + CB) + gamma(AC + BC) = (M - I)W", th398)
            .with_scalars(THREE_SCALARS),
        Entry::new("399", MatrixIdentity, IdempotentTriple,
            "pairwise symmetric weighted sum = W(M - I) + (M - I)W", th399)
            .with_scalars(THREE_SCALARS),
        Entry::new("3100", MatrixIdentity, IdempotentTriple,
            "pairwise skew weighted sum = WM - MW", th3100)
            .with_scalars(THREE_SCALARS),
        Entry::new("3100a", MatrixIdentity, IdempotentTriple,
            "alpha(B + C)A(B + C) + beta(A + C)B(A + C) + gamma(A + B)C(A + B) = (M - I)W(M - I)",
            th3100a)
            .with_scalars(THREE_SCALARS),
        Entry::new("3106", MatrixIdentity, IdempotentTriple,
            "(A + B)^2 + (A + C)^2 + (B + C)^2 = M(I + M)", th3106),
        Entry::new("3107", MatrixIdentity, IdempotentTriple,
            "(A - B)^2 + (A - C)^2 + (B - C)^2 = M(3I - M) = 9/4 I - (M - 3/2 I)^2", th3107),
        Entry::new("3108", MatrixIdentity, IdempotentTriple,
            "AB + BA + AC + CA + BC + CB = M(M - I) = (M - I/2)^2 - I/4", th3108),
        Entry::new("3109", MatrixIdentity, IdempotentTriple,
            "(AB + BA + AC + CA + BC + CB)^k = M^k (M - I)^k", th3109)
            .swept(),
        Entry::new("3110", RankEquality, IdempotentTriple,
            "r(sum of squares of sums) = r(M) + r(I + M) - m = dim(R(M) meet R(I + M))",
            th3110),
        Entry::new("3111", RankEquality, IdempotentTriple,
            "r(sum of squares of differences) = r(M) + r(3I - M) - m = dim(R(M) meet R(3I - M))",
            th3111),
        Entry::new("3112k0", RankEquality, IdempotentTriple,
            "r(-AB - BA - AC - CA - BC - CB) splits at the roots of x^2 - x", th3112k0),
        Entry::new("3112k1", RankEquality, IdempotentTriple,
            "r(I - AB - BA - AC - CA - BC - CB) splits at the roots of x^2 - x - 1", th3112k1)
            .radicand(5),
        Entry::new("3112k2", RankEquality, IdempotentTriple,
            "r(2I - AB - BA - AC - CA - BC - CB) splits at the roots of x^2 - x - 2", th3112k2),
        Entry::new("3112k3", RankEquality, IdempotentTriple,
            "r(3I - AB - BA - AC - CA - BC - CB) splits at the roots of x^2 - x - 3", th3112k3)
            .radicand(13),
        Entry::new("3112k4", RankEquality, IdempotentTriple,
            "r(4I - AB - BA - AC - CA - BC - CB) splits at the roots of x^2 - x - 4", th3112k4)
            .radicand(17),
        Entry::new("3112k5", RankEquality, IdempotentTriple,
            "r(5I - AB - BA - AC - CA - BC - CB) splits at the roots of x^2 - x - 5", th3112k5)
            .radicand(21),
        Entry::new("3112k6", RankEquality, IdempotentTriple,
            "r(6I - AB - BA - AC - CA - BC - CB) splits at the roots of x^2 - x - 6", th3112k6),
        Entry::new("3112a", SubspaceIdentity, IdempotentTriple,
            "R(sum of squares of sums) = R(M) meet R(I + M)", th3112a),
        Entry::new("3112b", SubspaceIdentity, IdempotentTriple,
            "R(sum of squares of differences) = R(M) meet R(3I - M)", th3112b),
        Entry::new("3112c", SubspaceIdentity, IdempotentTriple,
            "R(AB + BA + AC + CA + BC + CB) = R(M) meet R(I - M)", th3112c),
        Entry::new("3112d", SubspaceIdentity, IdempotentTriple,
            "N(sum of squares of sums) = N(M) + N(I + M)", th3112d)
            .noted("printed as R(N) cap N(I + M) with an undefined N; beyond the \
                    slipped letter, A = B = C = 0 refutes any meet reading, and the \
                    coprime split of x^2 + x turns the meet into a kernel sum")
            .with_literal(th3112d_literal),
        Entry::new("3112e", SubspaceIdentity, IdempotentTriple,
            "N(sum of squares of differences) = N(M) + N(3I - M)", th3112e)
            .noted("the printed intersection is refuted by A = B = C = 0; the coprime \
                    split of x^2 - 3x turns the meet into a kernel sum")
            .with_literal(th3112e_literal),
        Entry::new("3112f", SubspaceIdentity, IdempotentTriple,
            "N(AB + BA + AC + CA + BC + CB) = N(M) + N(I - M)", th3112f)
            .noted("the printed intersection is refuted by A = B = C = 0; the coprime \
                    split of x^2 - x turns the meet into a kernel sum")
            .with_literal(th3112f_literal),
        Entry::new("th313a", FactEquivalence, IdempotentTriple,
            "each weighted product sum vanishes exactly with its factored form", th313a)
            .with_scalars(THREE_SCALARS),
        Entry::new("th313b", FactEquivalence, IdempotentTriple,
            "the squared-sum dictionary between the three pairwise squares and M", th313b)
            .noted("the fourth right side is printed as (2M - 3I)^2 = 9I, duplicating \
                    the zero case; the 9/8 I target moves it to (9/2)I")
            .with_literal(th313b_literal),
        Entry::new("th313b7", FactEquivalence, IdempotentTriple,
            "AB + ... + CB = kI iff (I - 2M)^2 = (4k + 1)I, k = 0..6", th313b7),
        Entry::new("th313cns", FactEquivalence, IdempotentTriple,
            "the three weighted product sums are nonsingular exactly when W and M - I are",
            th313cns)
            .with_scalars(THREE_SCALARS),
        Entry::new("th313cinv", MatrixIdentity, IdempotentTriple,
            "inverses of the three weighted product sums factor through W^-1 and (M - I)^-1",
            th313cinv)
            .with_scalars(THREE_SCALARS)
            .conditional()
            .noted("the second inverse is printed with a stray comma between its two \
                    right-hand factors; checked as their product"),
        Entry::new("th313d", FactEquivalence, IdempotentTriple,
            "the two squared sums have full rank exactly when their split factors do",
            th313d),
        Entry::new("th313dk0", FactEquivalence, IdempotentTriple,
            "full rank of -AB - ... - CB tracks both roots of x^2 - x", th313dk0),
        Entry::new("th313dk1", FactEquivalence, IdempotentTriple,
            "full rank of I - AB - ... - CB tracks both roots of x^2 - x - 1", th313dk1)
            .radicand(5),
        Entry::new("th313dk2", FactEquivalence, IdempotentTriple,
            "full rank of 2I - AB - ... - CB tracks both roots of x^2 - x - 2", th313dk2),
        Entry::new("th313dk3", FactEquivalence, IdempotentTriple,
            "full rank of 3I - AB - ... - CB tracks both roots of x^2 - x - 3", th313dk3)
            .radicand(13),
        Entry::new("th313dk4", FactEquivalence, IdempotentTriple,
            "full rank of 4I - AB - ... - CB tracks both roots of x^2 - x - 4", th313dk4)
            .radicand(17),
        Entry::new("th313dk5", FactEquivalence, IdempotentTriple,
            "full rank of 5I - AB - ... - CB tracks both roots of x^2 - x - 5", th313dk5)
            .radicand(21),
        Entry::new("th313dk6", FactEquivalence, IdempotentTriple,
            "full rank of 6I - AB - ... - CB tracks both roots of x^2 - x - 6", th313dk6),
    ]
}
