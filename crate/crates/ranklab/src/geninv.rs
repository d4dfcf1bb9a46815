//! Generalized inverses: Moore-Penrose, the parametrized {1}-inverse family, and the
//! Drazin / group inverses.
//!
//! The Moore-Penrose inverse comes from a rank factorization `A = F G` (pivot
//! columns times reduced rows), giving `A† = G*(G G*)^-1 (F* F)^-1 F*`. Every other
//! inverse here is built on top of it: `{1}`-inverses as `A† + F_A U + V E_A` over
//! the complementary projectors, the Drazin inverse as `M^t (M^(2t+1))† M^t` at the
//! index `t`.

use crate::matrix::{Matrix, MatrixError};
use crate::scalar::ExactScalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GenInvError {
    #[error("matrix has index {0}; the group inverse needs index <= 1")]
    NoGroupInverse(usize),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// Which Penrose equations a sampled inverse is constructed to satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenInverseClass {
    /// `A X A = A` only.
    One,
    /// `{1, 3}`: additionally `(A X)* = A X`; realized by zeroing the `V` block.
    OneThree,
    /// `{1, 4}`: additionally `(X A)* = X A`; realized by zeroing the `U` block.
    OneFour,
}

/// A `{1}`-inverse together with the parameters that produced it.
#[derive(Debug, Clone)]
pub struct GenInverseSample {
    pub inverse: Matrix,
    pub u: Matrix,
    pub v: Matrix,
}

/// Moore-Penrose inverse, exact.
pub fn moore_penrose(a: &Matrix) -> Matrix {
    let field = a.field();
    let (reduced, pivots) = a.rref();
    let r = pivots.len();
    if r == 0 {
        return Matrix::zeros(a.cols(), a.rows(), field);
    }
    let f = a.select_columns(&pivots);
    let g = reduced.top_rows(r);
    debug_assert_eq!(f.mul(&g).expect("conformable"), *a, "rank factorization");
    let g_star = g.conj_transpose();
    let f_star = f.conj_transpose();
    let gg = g.mul(&g_star).expect("conformable");
    let ff = f_star.mul(&f).expect("conformable");
    let gg_inv = gg.inverse().expect("G G* has full rank");
    let ff_inv = ff.inverse().expect("F* F has full rank");
    g_star
        .mul(&gg_inv)
        .and_then(|x| x.mul(&ff_inv))
        .and_then(|x| x.mul(&f_star))
        .expect("conformable")
}

/// The three projectors attached to `A`: `(A A†, I - A A†, I - A† A)`.
pub fn projector_triple(a: &Matrix) -> (Matrix, Matrix, Matrix) {
    let pinv = moore_penrose(a);
    projector_triple_with(a, &pinv)
}

/// Same as [`projector_triple`] when the Moore-Penrose inverse is already at hand.
pub fn projector_triple_with(a: &Matrix, pinv: &Matrix) -> (Matrix, Matrix, Matrix) {
    let p = a.mul(pinv).expect("conformable");
    let e = &Matrix::identity(a.rows(), a.field()) - &p;
    let f = &Matrix::identity(a.cols(), a.field())
        - &pinv.mul(a).expect("conformable");
    (p, e, f)
}

/// `A† + F_A U + V E_A` for parameter matrices `U, V` of shape `cols x rows`.
/// Every such value satisfies `A X A = A`; the `U` term moves `X A`, the `V` term
/// moves `A X`.
pub fn one_inverse(a: &Matrix, u: &Matrix, v: &Matrix) -> Matrix {
    let pinv = moore_penrose(a);
    one_inverse_with(a, &pinv, u, v)
}

/// Same as [`one_inverse`] when `A†` is already at hand.
pub fn one_inverse_with(a: &Matrix, pinv: &Matrix, u: &Matrix, v: &Matrix) -> Matrix {
    let (_, e, f) = projector_triple_with(a, pinv);
    let fu = f.mul(u).expect("U must be cols x rows");
    let ve = v.mul(&e).expect("V must be cols x rows");
    &(pinv + &fu) + &ve
}

/// Smallest `t >= 0` with `r(M^t) = r(M^(t+1))`; `M^0 = I`. At most the order of
/// the matrix.
pub fn matrix_index(m: &Matrix) -> Result<usize, MatrixError> {
    if !m.is_square() {
        return Err(MatrixError::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let mut power = Matrix::identity(m.rows(), m.field());
    let mut rank = power.rank();
    let mut t = 0;
    loop {
        let next = power.mul(m)?;
        let next_rank = next.rank();
        if next_rank == rank {
            return Ok(t);
        }
        rank = next_rank;
        power = next;
        t += 1;
    }
}

/// Drazin inverse via `M^t (M^(2t+1))† M^t` at the index `t`. For nonsingular `M`
/// this is the ordinary inverse.
pub fn drazin(m: &Matrix) -> Result<Matrix, MatrixError> {
    let t = matrix_index(m)?;
    drazin_at(m, t as u32)
}

/// Drazin inverse computed from any exponent `l >= index(M)`; all such `l` give the
/// same value, which tests exploit.
pub fn drazin_at(m: &Matrix, l: u32) -> Result<Matrix, MatrixError> {
    let ml = m.pow(l)?;
    let core = m.pow(2 * l + 1)?;
    let core_pinv = moore_penrose(&core);
    ml.mul(&core_pinv)?.mul(&ml)
}

/// Group inverse: the Drazin inverse when the index is at most 1.
pub fn group_inverse(m: &Matrix) -> Result<Matrix, GenInvError> {
    let t = matrix_index(m)?;
    if t > 1 {
        return Err(GenInvError::NoGroupInverse(t));
    }
    Ok(drazin_at(m, t as u32)?)
}

/// True when `x` satisfies all four Penrose equations for `a`.
pub fn is_moore_penrose(a: &Matrix, x: &Matrix) -> bool {
    let ax = a.mul(x).expect("conformable");
    let xa = x.mul(a).expect("conformable");
    &(a * x) * a == *a
        && &(x * a) * x == *x
        && ax.conj_transpose() == ax
        && xa.conj_transpose() == xa
}

/// True when `x` satisfies the Penrose equations selected by `class`.
pub fn satisfies_class(a: &Matrix, x: &Matrix, class: GenInverseClass) -> bool {
    let one = &(a * x) * a == *a;
    match class {
        GenInverseClass::One => one,
        GenInverseClass::OneThree => {
            let ax = a.mul(x).expect("conformable");
            one && ax.conj_transpose() == ax
        }
        GenInverseClass::OneFour => {
            let xa = x.mul(a).expect("conformable");
            one && xa.conj_transpose() == xa
        }
    }
}

/// `I - A A†` and `I - A† A` shorthand for catalog code that needs both names.
pub fn complements(a: &Matrix) -> (Matrix, Matrix) {
    let (_, e, f) = projector_triple(a);
    (e, f)
}

/// Orthogonal projector onto `R(A)`, i.e. `A A†`.
pub fn range_projector(a: &Matrix) -> Matrix {
    let pinv = moore_penrose(a);
    a.mul(&pinv).expect("conformable")
}

/// Scales a matrix by the rational `1/2` and similar constants without leaving the
/// caller's field; convenience for checkers built around averages like `(I + A)/2`.
pub fn scale_rat(m: &Matrix, num: i64, den: i64) -> Matrix {
    let s = ExactScalar::from_rat(crate::scalar::rat(num, den), m.field());
    m.scale(&s).expect("same field")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::FieldSpec;

    fn f0() -> FieldSpec {
        FieldSpec::RATIONAL
    }

    #[test]
    fn moore_penrose_of_column_vector() {
        let a = Matrix::from_ints(&[&[1], &[1]], f0());
        let x = moore_penrose(&a);
        let expected = crate::geninv::scale_rat(&Matrix::from_ints(&[&[1, 1]], f0()), 1, 2);
        assert_eq!(x, expected);
        assert!(is_moore_penrose(&a, &x));
    }

    #[test]
    fn moore_penrose_of_diagonal_projector() {
        let a = Matrix::from_ints(&[&[1, 0], &[0, 0]], f0());
        assert_eq!(moore_penrose(&a), a);
    }

    #[test]
    fn moore_penrose_of_zero_and_empty() {
        let z = Matrix::zeros(2, 3, f0());
        assert_eq!(moore_penrose(&z), Matrix::zeros(3, 2, f0()));
        assert!(is_moore_penrose(&z, &moore_penrose(&z)));
        let empty = Matrix::zeros(0, 2, f0());
        assert_eq!(moore_penrose(&empty), Matrix::zeros(2, 0, f0()));
    }

    #[test]
    fn one_inverse_always_inner_inverse() {
        let a = Matrix::from_ints(&[&[1, 2, 0], &[0, 0, 0]], f0());
        let u = Matrix::from_ints(&[&[1, -1], &[0, 2], &[1, 1]], f0());
        let v = Matrix::from_ints(&[&[0, 1], &[1, 0], &[-2, 1]], f0());
        let x = one_inverse(&a, &u, &v);
        assert_eq!(a.mul(&x).unwrap().mul(&a).unwrap(), a);
        // The {1,3} and {1,4} conventions zero one parameter each.
        let zero = Matrix::zeros(3, 2, f0());
        assert!(satisfies_class(&a, &one_inverse(&a, &u, &zero), GenInverseClass::OneThree));
        assert!(satisfies_class(&a, &one_inverse(&a, &zero, &v), GenInverseClass::OneFour));
    }

    #[test]
    fn index_of_known_matrices() {
        assert_eq!(matrix_index(&Matrix::identity(3, f0())).unwrap(), 0);
        assert_eq!(matrix_index(&Matrix::zeros(2, 2, f0())).unwrap(), 1);
        let nilpotent = Matrix::from_ints(&[&[0, 1], &[0, 0]], f0());
        assert_eq!(matrix_index(&nilpotent).unwrap(), 2);
        assert_eq!(matrix_index(&Matrix::zeros(0, 0, f0())).unwrap(), 0);
    }

    #[test]
    fn drazin_of_nilpotent_is_zero() {
        let nilpotent = Matrix::from_ints(&[&[0, 1], &[0, 0]], f0());
        assert!(drazin(&nilpotent).unwrap().is_zero());
    }

    #[test]
    fn drazin_of_invertible_is_inverse() {
        let m = Matrix::from_ints(&[&[1, 1], &[0, 1]], f0());
        assert_eq!(drazin(&m).unwrap(), m.inverse().unwrap());
    }

    #[test]
    fn drazin_equations_hold() {
        // diag(2, 0) block plus a nilpotent coupling has index 2.
        let m = Matrix::from_ints(&[&[2, 0, 0], &[0, 0, 1], &[0, 0, 0]], f0());
        let t = matrix_index(&m).unwrap();
        assert_eq!(t, 2);
        let x = drazin(&m).unwrap();
        assert_eq!(m.mul(&x).unwrap(), x.mul(&m).unwrap());
        assert_eq!(x.mul(&m).unwrap().mul(&x).unwrap(), x);
        let mt1 = m.pow(t as u32 + 1).unwrap();
        assert_eq!(mt1.mul(&x).unwrap(), m.pow(t as u32).unwrap());
        // Any exponent at or above the index reproduces the same value.
        assert_eq!(drazin_at(&m, t as u32 + 1).unwrap(), x);
    }

    #[test]
    fn group_inverse_accepts_index_one_only() {
        let m = Matrix::from_ints(&[&[2, 0], &[0, 0]], f0());
        let x = group_inverse(&m).unwrap();
        let expected = scale_rat(&Matrix::from_ints(&[&[1, 0], &[0, 0]], f0()), 1, 2);
        assert_eq!(x, expected);
        let nilpotent = Matrix::from_ints(&[&[0, 1], &[0, 0]], f0());
        assert_eq!(group_inverse(&nilpotent), Err(GenInvError::NoGroupInverse(2)));
    }

    #[test]
    fn idempotent_is_its_own_group_inverse() {
        let a = Matrix::from_ints(&[&[1, -1], &[0, 0]], f0());
        assert!(a.is_idempotent());
        assert_eq!(group_inverse(&a).unwrap(), a);
    }
}
