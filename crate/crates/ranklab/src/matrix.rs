//! Dense matrices over [`ExactScalar`] with exact rank machinery.
//!
//! Everything here is immutable value semantics: operations return new matrices and
//! never mutate inputs, so matrices are safe to share across threads. Two rank
//! routines are maintained on purpose — fraction-free elimination ([`Matrix::rank`])
//! and naive Gauss-Jordan ([`Matrix::rank_naive`]) — and serve as permanent mutual
//! oracles; do not collapse them. Empty matrices (0 rows or 0 columns) are legal
//! everywhere and have rank 0.

use crate::scalar::{ExactScalar, FieldSpec, ScalarError};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::One;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Errors from matrix construction and algebra.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatrixError {
    #[error("shape mismatch: {op} on {lhs_rows}x{lhs_cols} and {rhs_rows}x{rhs_cols}")]
    ShapeMismatch {
        op: &'static str,
        lhs_rows: usize,
        lhs_cols: usize,
        rhs_rows: usize,
        rhs_cols: usize,
    },
    #[error("entry count {got} does not fill a {rows}x{cols} matrix")]
    BadEntryCount { rows: usize, cols: usize, got: usize },
    #[error("ragged block grid at block row {row}")]
    RaggedBlocks { row: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("operation requires a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("bad matrix JSON: {0}")]
    Json(String),
}

/// Immutable dense matrix, row-major, all entries in one field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    entries: Vec<ExactScalar>,
}

impl Matrix {
    /// Builds a matrix from row-major entries; every entry must carry `field`.
    pub fn new(
        rows: usize,
        cols: usize,
        entries: Vec<ExactScalar>,
        field: FieldSpec,
    ) -> Result<Self, MatrixError> {
        if entries.len() != rows * cols {
            return Err(MatrixError::BadEntryCount { rows, cols, got: entries.len() });
        }
        for e in &entries {
            if e.field() != field {
                return Err(ScalarError::FieldMismatch(field.radicand(), e.field().radicand())
                    .into());
            }
        }
        Ok(Matrix { rows, cols, field, entries })
    }

    pub fn from_rows(rows: Vec<Vec<ExactScalar>>, field: FieldSpec) -> Result<Self, MatrixError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != ncols {
                return Err(MatrixError::RaggedBlocks { row: i });
            }
        }
        Self::new(nrows, ncols, rows.into_iter().flatten().collect(), field)
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        field: FieldSpec,
        mut f: impl FnMut(usize, usize) -> ExactScalar,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, field, entries }
    }

    /// Integer matrix literal, handy in tests and examples.
    pub fn from_ints(rows: &[&[i64]], field: FieldSpec) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged integer literal");
        Matrix::from_fn(nrows, ncols, field, |i, j| ExactScalar::from_int(rows[i][j], field))
    }

    pub fn zeros(rows: usize, cols: usize, field: FieldSpec) -> Self {
        Matrix::from_fn(rows, cols, field, |_, _| ExactScalar::zero(field))
    }

    pub fn identity(n: usize, field: FieldSpec) -> Self {
        Matrix::from_fn(n, n, field, |i, j| {
            if i == j {
                ExactScalar::one(field)
            } else {
                ExactScalar::zero(field)
            }
        })
    }

    /// `value * I`.
    pub fn scalar_identity(n: usize, value: &ExactScalar) -> Self {
        let field = value.field();
        Matrix::from_fn(n, n, field, |i, j| {
            if i == j {
                value.clone()
            } else {
                ExactScalar::zero(field)
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &ExactScalar {
        &self.entries[i * self.cols + j]
    }

    fn set(&mut self, i: usize, j: usize, v: ExactScalar) {
        self.entries[i * self.cols + j] = v;
    }

    /// Copy with one entry replaced; handy for coordinate searches.
    pub fn with_entry(&self, i: usize, j: usize, v: ExactScalar) -> Self {
        let mut out = self.clone();
        out.set(i, j, v);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(ExactScalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.rows, self.field)
    }

    pub fn is_idempotent(&self) -> bool {
        self.is_square() && self.mul(self).map(|sq| sq == *self).unwrap_or(false)
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && self.conj_transpose() == *self
    }

    fn check_same_shape(&self, other: &Self, op: &'static str) -> Result<(), MatrixError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(MatrixError::ShapeMismatch {
                op,
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: other.rows,
                rhs_cols: other.cols,
            });
        }
        self.check_field(other)
    }

    fn check_field(&self, other: &Self) -> Result<(), MatrixError> {
        if self.field != other.field {
            return Err(ScalarError::FieldMismatch(
                self.field.radicand(),
                other.field.radicand(),
            )
            .into());
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, MatrixError> {
        self.check_same_shape(other, "add")?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(x, y)| x.add(y))
            .collect::<Result<_, _>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, field: self.field, entries })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, MatrixError> {
        self.check_same_shape(other, "sub")?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(x, y)| x.sub(y))
            .collect::<Result<_, _>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, field: self.field, entries })
    }

    pub fn neg(&self) -> Self {
        let entries = self.entries.iter().map(ExactScalar::neg).collect();
        Matrix { rows: self.rows, cols: self.cols, field: self.field, entries }
    }

    pub fn scale(&self, s: &ExactScalar) -> Result<Self, MatrixError> {
        if s.field() != self.field {
            return Err(
                ScalarError::FieldMismatch(self.field.radicand(), s.field().radicand()).into()
            );
        }
        let entries = self
            .entries
            .iter()
            .map(|x| x.mul(s))
            .collect::<Result<_, _>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, field: self.field, entries })
    }

    pub fn mul(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::ShapeMismatch {
                op: "mul",
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: other.rows,
                rhs_cols: other.cols,
            });
        }
        self.check_field(other)?;
        let mut out = Matrix::zeros(self.rows, other.cols, self.field);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = ExactScalar::zero(self.field);
                for k in 0..self.cols {
                    acc = acc.add(&self.at(i, k).mul(other.at(k, j))?)?;
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Nonnegative integer power of a square matrix; `pow(0)` is the identity.
    pub fn pow(&self, k: u32) -> Result<Self, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let mut acc = Matrix::identity(self.rows, self.field);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Conjugate transpose; the `*` of the identity catalog.
    pub fn conj_transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, self.field, |i, j| self.at(j, i).conj())
    }

    /// Plain transpose, used by the vectorized solver only; catalog code wants
    /// [`Matrix::conj_transpose`].
    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, self.field, |i, j| self.at(j, i).clone())
    }

    pub fn hconcat(parts: &[&Matrix]) -> Result<Self, MatrixError> {
        assert!(!parts.is_empty(), "hconcat of zero blocks");
        let rows = parts[0].rows;
        let field = parts[0].field;
        for p in parts {
            if p.rows != rows {
                return Err(MatrixError::RaggedBlocks { row: 0 });
            }
            if p.field != field {
                return Err(ScalarError::FieldMismatch(field.radicand(), p.field.radicand())
                    .into());
            }
        }
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut out = Matrix::zeros(rows, cols, field);
        let mut offset = 0;
        for p in parts {
            for i in 0..rows {
                for j in 0..p.cols {
                    out.set(i, offset + j, p.at(i, j).clone());
                }
            }
            offset += p.cols;
        }
        Ok(out)
    }

    pub fn vconcat(parts: &[&Matrix]) -> Result<Self, MatrixError> {
        assert!(!parts.is_empty(), "vconcat of zero blocks");
        let cols = parts[0].cols;
        let field = parts[0].field;
        for p in parts {
            if p.cols != cols {
                return Err(MatrixError::RaggedBlocks { row: 0 });
            }
            if p.field != field {
                return Err(ScalarError::FieldMismatch(field.radicand(), p.field.radicand())
                    .into());
            }
        }
        let rows = parts.iter().map(|p| p.rows).sum();
        let mut out = Matrix::zeros(rows, cols, field);
        let mut offset = 0;
        for p in parts {
            for i in 0..p.rows {
                for j in 0..cols {
                    out.set(offset + i, j, p.at(i, j).clone());
                }
            }
            offset += p.rows;
        }
        Ok(out)
    }

    /// Assembles a block grid. Every block row must agree on heights and every block
    /// column on widths; ragged grids are rejected.
    pub fn block(grid: &[Vec<&Matrix>]) -> Result<Self, MatrixError> {
        assert!(!grid.is_empty() && !grid[0].is_empty(), "block of zero grid");
        let width = grid[0].len();
        let mut rows = Vec::with_capacity(grid.len());
        for (i, block_row) in grid.iter().enumerate() {
            if block_row.len() != width {
                return Err(MatrixError::RaggedBlocks { row: i });
            }
            rows.push(Matrix::hconcat(block_row).map_err(|_| MatrixError::RaggedBlocks { row: i })?);
        }
        let refs: Vec<&Matrix> = rows.iter().collect();
        Matrix::vconcat(&refs)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Rank by fraction-free (Bareiss-style) elimination. Rows are first rescaled to
    /// clear denominators; each update divides by the previous pivot, keeping entry
    /// growth polynomial. The independent check is [`Matrix::rank_naive`].
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        for i in 0..a.rows {
            let mut lcm = BigInt::one();
            for j in 0..a.cols {
                let (p, q, r, s) = a.at(i, j).components();
                for c in [p, q, r, s] {
                    lcm = lcm.lcm(c.denom());
                }
            }
            if !lcm.is_one() {
                let s = ExactScalar::from_rat(Ratio::from_integer(lcm), a.field);
                for j in 0..a.cols {
                    let v = a.at(i, j).mul(&s).expect("same field");
                    a.set(i, j, v);
                }
            }
        }
        let (m, n) = (a.rows, a.cols);
        let mut rank = 0;
        let mut pivot_row = 0;
        let mut prev = ExactScalar::one(a.field);
        for col in 0..n {
            if pivot_row == m {
                break;
            }
            let Some(p) = (pivot_row..m).find(|&r| !a.at(r, col).is_zero()) else {
                continue;
            };
            a.swap_rows(pivot_row, p);
            let pivot = a.at(pivot_row, col).clone();
            for r in pivot_row + 1..m {
                let lead = a.at(r, col).clone();
                for c in col + 1..n {
                    let num = pivot
                        .mul(a.at(r, c))
                        .and_then(|x| x.sub(&lead.mul(a.at(pivot_row, c)).expect("same field")))
                        .expect("same field");
                    let v = num.div(&prev).expect("previous pivot is nonzero");
                    a.set(r, c, v);
                }
                a.set(r, col, ExactScalar::zero(a.field));
            }
            prev = pivot;
            pivot_row += 1;
            rank += 1;
        }
        rank
    }

    /// Rank by naive Gauss-Jordan over the rationals; mutual oracle for
    /// [`Matrix::rank`].
    pub fn rank_naive(&self) -> usize {
        let mut a = self.clone();
        let (m, n) = (a.rows, a.cols);
        let mut rank = 0;
        for col in 0..n {
            let Some(p) = (rank..m).find(|&r| !a.at(r, col).is_zero()) else {
                continue;
            };
            a.swap_rows(rank, p);
            let inv = a.at(rank, col).inv().expect("pivot is nonzero");
            for c in col..n {
                let v = a.at(rank, c).mul(&inv).expect("same field");
                a.set(rank, c, v);
            }
            for r in 0..m {
                if r == rank || a.at(r, col).is_zero() {
                    continue;
                }
                let factor = a.at(r, col).clone();
                for c in col..n {
                    let v = a
                        .at(r, c)
                        .sub(&factor.mul(a.at(rank, c)).expect("same field"))
                        .expect("same field");
                    a.set(r, c, v);
                }
            }
            rank += 1;
            if rank == m {
                break;
            }
        }
        rank
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut a = self.clone();
        let (m, n) = (a.rows, a.cols);
        let mut pivots = Vec::new();
        for col in 0..n {
            let row = pivots.len();
            if row == m {
                break;
            }
            let Some(p) = (row..m).find(|&r| !a.at(r, col).is_zero()) else {
                continue;
            };
            a.swap_rows(row, p);
            let inv = a.at(row, col).inv().expect("pivot is nonzero");
            for c in col..n {
                let v = a.at(row, c).mul(&inv).expect("same field");
                a.set(row, c, v);
            }
            for r in 0..m {
                if r == row || a.at(r, col).is_zero() {
                    continue;
                }
                let factor = a.at(r, col).clone();
                for c in col..n {
                    let v = a
                        .at(r, c)
                        .sub(&factor.mul(a.at(row, c)).expect("same field"))
                        .expect("same field");
                    a.set(r, c, v);
                }
            }
            pivots.push(col);
        }
        (a, pivots)
    }

    /// Inverse of a square nonsingular matrix.
    pub fn inverse(&self) -> Result<Matrix, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let aug = Matrix::hconcat(&[self, &Matrix::identity(n, self.field)])?;
        let (r, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| i != c) {
            return Err(MatrixError::Singular);
        }
        Ok(Matrix::from_fn(n, n, self.field, |i, j| r.at(i, n + j).clone()))
    }

    /// Basis of the right null space as columns of an `n x (n - rank)` matrix.
    pub fn kernel_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let n = self.cols;
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(n, free.len(), self.field);
        for (idx, &fc) in free.iter().enumerate() {
            out.set(fc, idx, ExactScalar::one(self.field));
            for (pi, &pc) in pivots.iter().enumerate() {
                out.set(pc, idx, r.at(pi, fc).neg());
            }
        }
        out
    }

    /// Columns of `self` selected by index, in order.
    pub fn select_columns(&self, indices: &[usize]) -> Matrix {
        Matrix::from_fn(self.rows, indices.len(), self.field, |i, j| {
            self.at(i, indices[j]).clone()
        })
    }

    /// Rows `0..k` as a new matrix.
    pub fn top_rows(&self, k: usize) -> Matrix {
        Matrix::from_fn(k, self.cols, self.field, |i, j| self.at(i, j).clone())
    }

    /// Rows `k..rows` as a new matrix.
    pub fn drop_top_rows(&self, k: usize) -> Matrix {
        Matrix::from_fn(self.rows - k, self.cols, self.field, |i, j| self.at(k + i, j).clone())
    }

    /// `R(self) ⊆ R(other)`; both matrices must have the same row count.
    pub fn range_contained_in(&self, other: &Matrix) -> Result<bool, MatrixError> {
        let joint = Matrix::hconcat(&[other, self])?;
        Ok(joint.rank() == other.rank())
    }

    pub fn range_equal(&self, other: &Matrix) -> Result<bool, MatrixError> {
        let joint = Matrix::hconcat(&[self, other])?;
        let r = joint.rank();
        Ok(r == self.rank() && r == other.rank())
    }

    /// `N(self) ⊆ N(other)`; both matrices must have the same column count.
    pub fn nullspace_contained_in(&self, other: &Matrix) -> Result<bool, MatrixError> {
        let joint = Matrix::vconcat(&[self, other])?;
        Ok(joint.rank() == self.rank())
    }

    pub fn nullspace_equal(&self, other: &Matrix) -> Result<bool, MatrixError> {
        let joint = Matrix::vconcat(&[self, other])?;
        let r = joint.rank();
        Ok(r == self.rank() && r == other.rank())
    }

    /// `dim(R(self) ∩ R(other))` through the rank formula
    /// `r(M) + r(N) - r[M, N]`; the constructive route is
    /// [`Matrix::range_intersection_basis`].
    pub fn range_intersection_dim(&self, other: &Matrix) -> Result<usize, MatrixError> {
        let joint = Matrix::hconcat(&[self, other])?;
        Ok(self.rank() + other.rank() - joint.rank())
    }

    /// Matrix whose column space is exactly `R(self) ∩ R(other)`, built from the
    /// kernel of `[self, -other]`: for each kernel vector `(x; y)` the column
    /// `self * x = other * y` lies in both ranges, and such columns span the
    /// intersection.
    pub fn range_intersection_basis(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        let joint = Matrix::hconcat(&[self, &other.neg()])?;
        let kernel = joint.kernel_basis();
        let x_part = kernel.top_rows(self.cols);
        self.mul(&x_part)
    }

    /// Matrix whose columns span `N(self) ∩ N(other)`.
    pub fn nullspace_intersection_basis(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        Ok(Matrix::vconcat(&[self, other])?.kernel_basis())
    }

    /// Matrix JSON form used in reports and by the instance generator.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| serde_json::Value::String(self.at(i, j).to_string()))
                    .collect()
            })
            .collect();
        serde_json::json!({
            "rows": self.rows,
            "cols": self.cols,
            "field": self.field.radicand(),
            "entries": rows,
        })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, MatrixError> {
        let obj = value.as_object().ok_or_else(|| MatrixError::Json("not an object".into()))?;
        let get_dim = |key: &str| -> Result<usize, MatrixError> {
            obj.get(key)
                .and_then(serde_json::Value::as_u64)
                .map(|v| v as usize)
                .ok_or_else(|| MatrixError::Json(format!("missing integer field {key:?}")))
        };
        let rows = get_dim("rows")?;
        let cols = get_dim("cols")?;
        let radicand = obj
            .get("field")
            .and_then(serde_json::Value::as_u64)
            .ok_or_else(|| MatrixError::Json("missing integer field \"field\"".into()))?;
        let field = FieldSpec::new(radicand)?;
        let entries = obj
            .get("entries")
            .and_then(serde_json::Value::as_array)
            .ok_or_else(|| MatrixError::Json("missing array field \"entries\"".into()))?;
        if entries.len() != rows {
            return Err(MatrixError::Json(format!("expected {rows} rows, got {}", entries.len())));
        }
        let mut flat = Vec::with_capacity(rows * cols);
        for row in entries {
            let row = row
                .as_array()
                .ok_or_else(|| MatrixError::Json("row is not an array".into()))?;
            if row.len() != cols {
                return Err(MatrixError::Json(format!("expected {cols} cols, got {}", row.len())));
            }
            for cell in row {
                let text = cell
                    .as_str()
                    .ok_or_else(|| MatrixError::Json("entry is not a string".into()))?;
                flat.push(ExactScalar::parse(text, field)?);
            }
        }
        Matrix::new(rows, cols, flat, field)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{} over sqrt({})]", self.rows, self.cols, self.field.radicand())?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

// Operator sugar for checker code. Shape or field mismatches in checkers are
// programming errors, so these panic with the underlying report.
impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        Matrix::add(self, rhs).expect("matrix add")
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        Matrix::sub(self, rhs).expect("matrix sub")
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        Matrix::mul(self, rhs).expect("matrix mul")
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix::neg(self)
    }
}

/// One `L * X_unknown * R` summand of a linear matrix equation.
pub struct LinearTerm {
    pub unknown: usize,
    pub left: Matrix,
    pub right: Matrix,
}

/// `sum of terms = rhs`, linear in the unknowns.
pub struct MatrixEquation {
    pub terms: Vec<LinearTerm>,
    pub rhs: Matrix,
}

/// General solution of a simultaneous linear matrix system: one particular solution
/// plus a basis of the homogeneous solution space (each basis element is one matrix
/// per unknown). Callers draw random solutions by combining the basis.
pub struct SystemSolution {
    pub particular: Vec<Matrix>,
    pub homogeneous: Vec<Vec<Matrix>>,
}

/// Kronecker product, used only to vectorize matrix equations.
fn kronecker(a: &Matrix, b: &Matrix) -> Matrix {
    Matrix::from_fn(
        a.rows() * b.rows(),
        a.cols() * b.cols(),
        a.field(),
        |i, j| {
            let (ai, bi) = (i / b.rows(), i % b.rows());
            let (aj, bj) = (j / b.cols(), j % b.cols());
            a.at(ai, aj).mul(b.at(bi, bj)).expect("same field")
        },
    )
}

/// Column-major vectorization.
fn vec_of(m: &Matrix) -> Vec<ExactScalar> {
    let mut out = Vec::with_capacity(m.rows() * m.cols());
    for j in 0..m.cols() {
        for i in 0..m.rows() {
            out.push(m.at(i, j).clone());
        }
    }
    out
}

fn unvec(rows: usize, cols: usize, field: FieldSpec, data: &[ExactScalar]) -> Matrix {
    Matrix::from_fn(rows, cols, field, |i, j| data[j * rows + i].clone())
}

/// Solves the simultaneous system via `vec(L X R) = (R^T ⊗ L) vec(X)`.
///
/// `shapes[u]` is the shape of unknown `u`. Terms may repeat an unknown; their
/// contributions accumulate. Returns the affine solution space or
/// [`MatrixError::Inconsistent`].
pub fn solve_matrix_system(
    equations: &[MatrixEquation],
    shapes: &[(usize, usize)],
    field: FieldSpec,
) -> Result<SystemSolution, MatrixError> {
    let col_width: Vec<usize> = shapes.iter().map(|&(p, q)| p * q).collect();
    let col_offset: Vec<usize> = col_width
        .iter()
        .scan(0, |acc, w| {
            let v = *acc;
            *acc += w;
            Some(v)
        })
        .collect();
    let total_cols: usize = col_width.iter().sum();
    let total_rows: usize = equations.iter().map(|e| e.rhs.rows() * e.rhs.cols()).sum();

    let mut system = Matrix::zeros(total_rows, total_cols + 1, field);
    let mut row_base = 0;
    for eq in equations {
        let eq_rows = eq.rhs.rows() * eq.rhs.cols();
        for term in &eq.terms {
            let (p, q) = shapes[term.unknown];
            if term.left.cols() != p || term.right.rows() != q {
                return Err(MatrixError::ShapeMismatch {
                    op: "solve term",
                    lhs_rows: term.left.rows(),
                    lhs_cols: term.left.cols(),
                    rhs_rows: term.right.rows(),
                    rhs_cols: term.right.cols(),
                });
            }
            let block = kronecker(&term.right.transpose(), &term.left);
            debug_assert_eq!(block.rows(), eq_rows);
            for i in 0..eq_rows {
                for j in 0..block.cols() {
                    let cur = system.at(row_base + i, col_offset[term.unknown] + j);
                    let v = cur.add(block.at(i, j)).expect("same field");
                    system.set(row_base + i, col_offset[term.unknown] + j, v);
                }
            }
        }
        for (i, v) in vec_of(&eq.rhs).into_iter().enumerate() {
            system.set(row_base + i, total_cols, v);
        }
        row_base += eq_rows;
    }

    let (r, pivots) = system.rref();
    if pivots.contains(&total_cols) {
        return Err(MatrixError::Inconsistent);
    }
    let mut particular_flat = vec![ExactScalar::zero(field); total_cols];
    for (pi, &pc) in pivots.iter().enumerate() {
        particular_flat[pc] = r.at(pi, total_cols).clone();
    }
    // Kernel of the coefficient part, read off the same echelon form.
    let free: Vec<usize> = (0..total_cols).filter(|c| !pivots.contains(c)).collect();
    let mut homogeneous = Vec::with_capacity(free.len());
    for &fc in &free {
        let mut flat = vec![ExactScalar::zero(field); total_cols];
        flat[fc] = ExactScalar::one(field);
        for (pi, &pc) in pivots.iter().enumerate() {
            flat[pc] = r.at(pi, fc).neg();
        }
        homogeneous.push(split_unknowns(&flat, shapes, &col_offset, field));
    }
    Ok(SystemSolution {
        particular: split_unknowns(&particular_flat, shapes, &col_offset, field),
        homogeneous,
    })
}

fn split_unknowns(
    flat: &[ExactScalar],
    shapes: &[(usize, usize)],
    offsets: &[usize],
    field: FieldSpec,
) -> Vec<Matrix> {
    shapes
        .iter()
        .zip(offsets)
        .map(|(&(p, q), &off)| unvec(p, q, field, &flat[off..off + p * q]))
        .collect()
}

/// Convenience: verifies that substituting `values` satisfies every equation.
pub fn system_satisfied(equations: &[MatrixEquation], values: &[Matrix]) -> bool {
    equations.iter().all(|eq| {
        let mut acc = Matrix::zeros(eq.rhs.rows(), eq.rhs.cols(), eq.rhs.field());
        for term in &eq.terms {
            let prod = term
                .left
                .mul(&values[term.unknown])
                .and_then(|lx| lx.mul(&term.right))
                .expect("conformable term");
            acc = acc.add(&prod).expect("conformable sum");
        }
        acc == eq.rhs
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn f0() -> FieldSpec {
        FieldSpec::RATIONAL
    }

    #[test]
    fn block_assembly_matches_example() {
        // [[-X, 0, X], [0, Y, Y], [X, Y, 0]] with X = Y = 1x1 identity.
        let x = Matrix::identity(1, f0());
        let z = Matrix::zeros(1, 1, f0());
        let n = Matrix::block(&[
            vec![&x.neg(), &z, &x],
            vec![&z, &x, &x],
            vec![&x, &x, &z],
        ])
        .unwrap();
        let expected = Matrix::from_ints(&[&[-1, 0, 1], &[0, 1, 1], &[1, 1, 0]], f0());
        assert_eq!(n, expected);
        // Row 3 plus row 1 equals row 2, so the block matrix is singular.
        assert_eq!(n.rank(), 2);
        assert_eq!(n.rank_naive(), 2);
    }

    #[test]
    fn ragged_blocks_rejected() {
        let a = Matrix::identity(2, f0());
        let b = Matrix::identity(1, f0());
        assert!(matches!(
            Matrix::block(&[vec![&a, &a], vec![&a, &b]]),
            Err(MatrixError::RaggedBlocks { .. })
        ));
    }

    #[test]
    fn rank_routes_agree_on_known_cases() {
        let m = Matrix::from_ints(&[&[1, 1], &[1, 1]], f0());
        assert_eq!(m.rank(), 1);
        assert_eq!(m.rank_naive(), 1);
        let m = Matrix::from_ints(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]], f0());
        assert_eq!(m.rank(), 2);
        assert_eq!(m.rank_naive(), 2);
        let empty = Matrix::zeros(0, 3, f0());
        assert_eq!(empty.rank(), 0);
        assert_eq!(empty.rank_naive(), 0);
        let wide = Matrix::zeros(3, 0, f0());
        assert_eq!(wide.rank(), 0);
    }

    #[test]
    fn kernel_of_rank_one_matrix() {
        let m = Matrix::from_ints(&[&[1, 1], &[1, 1]], f0());
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 1);
        assert!(m.mul(&k).unwrap().is_zero());
        let expected = Matrix::from_ints(&[&[-1], &[1]], f0());
        // Basis is unique up to scale for a 1-dimensional kernel.
        assert_eq!(k.rank(), 1);
        assert_eq!(Matrix::hconcat(&[&k, &expected]).unwrap().rank(), 1);
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_ints(&[&[1, 1], &[0, 1]], f0());
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).unwrap().is_identity());
        let singular = Matrix::from_ints(&[&[1, 1], &[1, 1]], f0());
        assert_eq!(singular.inverse(), Err(MatrixError::Singular));
        let empty = Matrix::zeros(0, 0, f0());
        assert!(empty.inverse().unwrap().is_identity());
    }

    #[test]
    fn intersection_dim_matches_basis() {
        // R([e1, e2]) ∩ R([e2, e3]) = span{e2}.
        let m = Matrix::from_ints(&[&[1, 0], &[0, 1], &[0, 0]], f0());
        let n = Matrix::from_ints(&[&[0, 0], &[1, 0], &[0, 1]], f0());
        assert_eq!(m.range_intersection_dim(&n).unwrap(), 1);
        let basis = m.range_intersection_basis(&n).unwrap();
        assert_eq!(basis.rank(), 1);
        let e2 = Matrix::from_ints(&[&[0], &[1], &[0]], f0());
        assert!(basis.range_equal(&e2).unwrap());
    }

    #[test]
    fn complex_rank_uses_conjugate_structure() {
        let f = f0();
        let i = ExactScalar::i(f);
        let one = ExactScalar::one(f);
        // [[1, i], [i, -1]] has rank 1: second row is i * first row.
        let m = Matrix::new(
            2,
            2,
            vec![one.clone(), i.clone(), i.clone(), one.neg()],
            f,
        )
        .unwrap();
        assert_eq!(m.rank(), 1);
        assert_eq!(m.rank_naive(), 1);
        assert_eq!(m.conj_transpose().rank(), 1);
    }

    #[test]
    fn solver_returns_affine_solution_space() {
        // X with (M - I)X = 0 for M = [[1,1],[0,0]]: columns of X in span{(1,0)}.
        let f = f0();
        let m = Matrix::from_ints(&[&[1, 1], &[0, 0]], f);
        let lhs = m.sub(&Matrix::identity(2, f)).unwrap();
        let eqs = [MatrixEquation {
            terms: vec![LinearTerm { unknown: 0, left: lhs, right: Matrix::identity(2, f) }],
            rhs: Matrix::zeros(2, 2, f),
        }];
        let sol = solve_matrix_system(&eqs, &[(2, 2)], f).unwrap();
        assert!(sol.particular[0].is_zero());
        assert_eq!(sol.homogeneous.len(), 2);
        for basis in &sol.homogeneous {
            assert!(system_satisfied(&eqs, basis));
        }
    }

    #[test]
    fn solver_detects_inconsistency() {
        let f = f0();
        let zero = Matrix::zeros(2, 2, f);
        let eqs = [MatrixEquation {
            terms: vec![LinearTerm {
                unknown: 0,
                left: zero.clone(),
                right: Matrix::identity(2, f),
            }],
            rhs: Matrix::identity(2, f),
        }];
        assert_eq!(
            solve_matrix_system(&eqs, &[(2, 2)], f).err(),
            Some(MatrixError::Inconsistent)
        );
    }

    #[test]
    fn json_round_trip() {
        let f = FieldSpec::new(5).unwrap();
        let m = Matrix::from_fn(2, 3, f, |i, j| {
            ExactScalar::from_components(
                rat(i as i64 + 1, 2),
                rat(j as i64, 3),
                rat(1, 1),
                rat(0, 1),
                f,
            )
            .unwrap()
        });
        let json = m.to_json();
        assert_eq!(Matrix::from_json(&json).unwrap(), m);
        assert_eq!(json["rows"], 2);
        assert_eq!(json["field"], 5);
    }
}
