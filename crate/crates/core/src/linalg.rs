//! Dense exact matrices over a field and over its univariate polynomial ring.
//!
//! Vandermonde matrices accept the distinguished point at infinity, whose
//! column is the last standard basis vector (a degree-`< k` polynomial
//! "evaluates" at infinity to its `x^{k-1}` coefficient). Polynomial
//! determinants use fraction-free Bareiss elimination.

use std::fmt;

use crate::field::{embed, Field, FieldElement, FieldError};
use crate::poly::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatrixError {
    NotSquare,
    Singular,
    DuplicatePoints,
    IndexOutOfRange,
    DimensionMismatch,
    ContextMismatch,
}

impl fmt::Display for MatrixError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixError::NotSquare => write!(f, "matrix is not square"),
            MatrixError::Singular => write!(f, "matrix is singular"),
            MatrixError::DuplicatePoints => write!(f, "evaluation points are not distinct"),
            MatrixError::IndexOutOfRange => write!(f, "index out of range"),
            MatrixError::DimensionMismatch => write!(f, "matrix dimensions do not match"),
            MatrixError::ContextMismatch => write!(f, "mixed field contexts"),
        }
    }
}

impl std::error::Error for MatrixError {}

impl From<FieldError> for MatrixError {
    fn from(e: FieldError) -> Self {
        match e {
            FieldError::ContextMismatch | FieldError::NoEmbedding => MatrixError::ContextMismatch,
            FieldError::DivisionByZero => MatrixError::Singular,
            _ => MatrixError::ContextMismatch,
        }
    }
}

/// An evaluation point: a field element or the point at infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EvalPoint {
    Finite(FieldElement),
    Infinity,
}

impl EvalPoint {
    pub fn is_infinity(&self) -> bool {
        matches!(self, EvalPoint::Infinity)
    }

    pub fn as_finite(&self) -> Option<&FieldElement> {
        match self {
            EvalPoint::Finite(a) => Some(a),
            EvalPoint::Infinity => None,
        }
    }
}

impl fmt::Display for EvalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalPoint::Finite(a) => write!(f, "{a}"),
            EvalPoint::Infinity => write!(f, "inf"),
        }
    }
}

/// Checks pairwise distinctness with at most one infinity.
pub fn points_distinct(points: &[EvalPoint]) -> bool {
    for (i, a) in points.iter().enumerate() {
        for b in points.iter().skip(i + 1) {
            if a == b {
                return false;
            }
        }
    }
    true
}

/// Dense row-major matrix over a [`Field`].
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{} over {:?}]", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| format!("{}", self.at(i, j)))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn new(field: &Field, rows: usize, cols: usize, data: Vec<FieldElement>) -> Matrix {
        assert_eq!(data.len(), rows * cols);
        debug_assert!(data.iter().all(|e| e.field().same(field)));
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix::new(field, rows, cols, vec![field.zero(); rows * cols])
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = field.one();
        }
        m
    }

    /// Builds from unsigned integer entries reduced mod p; test and golden
    /// data helper.
    pub fn from_u64_rows(field: &Field, rows: &[Vec<u64>]) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            data.extend(row.iter().map(|&v| field.from_u64(v)));
        }
        Matrix::new(field, r, c, data)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &FieldElement {
        assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut FieldElement {
        assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }

    pub fn entries(&self) -> &[FieldElement] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        assert!(i < self.rows);
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        out
    }

    pub fn matmul(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::DimensionMismatch);
        }
        if !self.field.same(&other.field) {
            return Err(MatrixError::ContextMismatch);
        }
        let mut out = Matrix::zeros(&self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = self.field.zero();
                for l in 0..self.cols {
                    acc = acc.add(&self.at(i, l).mul(other.at(l, j)));
                }
                *out.at_mut(i, j) = acc;
            }
        }
        Ok(out)
    }

    /// Horizontal concatenation `(self | other)`.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        if self.rows != other.rows {
            return Err(MatrixError::DimensionMismatch);
        }
        let mut out = Matrix::zeros(&self.field, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(i, j) = self.at(i, j).clone();
            }
            for j in 0..other.cols {
                *out.at_mut(i, self.cols + j) = other.at(i, j).clone();
            }
        }
        Ok(out)
    }

    /// Stacks rows of `self` on top of rows of `other`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix, MatrixError> {
        if self.cols != other.cols {
            return Err(MatrixError::DimensionMismatch);
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix::new(
            &self.field,
            self.rows + other.rows,
            self.cols,
            data,
        ))
    }

    /// Selected columns, indices strictly increasing.
    pub fn columns_submatrix(&self, cols: &[usize]) -> Result<Matrix, MatrixError> {
        check_column_selection(cols, self.cols)?;
        let mut out = Matrix::zeros(&self.field, self.rows, cols.len());
        for i in 0..self.rows {
            for (jj, &j) in cols.iter().enumerate() {
                *out.at_mut(i, jj) = self.at(i, j).clone();
            }
        }
        Ok(out)
    }

    /// Right-multiplies by `diag(v)`, scaling column j by `v[j]`.
    pub fn scale_columns(&self, v: &[FieldElement]) -> Result<Matrix, MatrixError> {
        if v.len() != self.cols {
            return Err(MatrixError::DimensionMismatch);
        }
        let mut out = self.clone();
        for i in 0..self.rows {
            for (j, vj) in v.iter().enumerate() {
                *out.at_mut(i, j) = self.at(i, j).mul(vj);
            }
        }
        Ok(out)
    }

    /// Entry-wise embedding into an extension field.
    pub fn embed_into(&self, target: &Field) -> Result<Matrix, MatrixError> {
        let data = self
            .data
            .iter()
            .map(|e| embed(e, target))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Matrix::new(target, self.rows, self.cols, data))
    }

    /// Exact determinant by Gaussian elimination with row pivoting.
    pub fn det(&self) -> Result<FieldElement, MatrixError> {
        if self.rows != self.cols {
            return Err(MatrixError::NotSquare);
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = self.field.one();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m.at(r, col).is_zero());
            let Some(pivot) = pivot else {
                return Ok(self.field.zero());
            };
            if pivot != col {
                m.swap_rows(pivot, col);
                det = det.neg();
            }
            let pv = m.at(col, col).clone();
            det = det.mul(&pv);
            let pv_inv = pv.inv().expect("pivot nonzero");
            for r in col + 1..n {
                let factor = m.at(r, col).mul(&pv_inv);
                if factor.is_zero() {
                    continue;
                }
                for c in col..n {
                    let sub = factor.mul(m.at(col, c));
                    *m.at_mut(r, c) = m.at(r, c).sub(&sub);
                }
            }
        }
        Ok(det)
    }

    pub fn rank(&self) -> usize {
        self.clone().row_reduce(false).1
    }

    /// Reduced row echelon form: pivots 1, zeros above and below.
    pub fn rref(&self) -> Matrix {
        self.clone().row_reduce(true).0
    }

    /// Inverse of a nonsingular square matrix.
    pub fn inverse(&self) -> Result<Matrix, MatrixError> {
        if self.rows != self.cols {
            return Err(MatrixError::NotSquare);
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(&self.field, n))?;
        let (red, _) = aug.row_reduce(true);
        // Singular inputs leave a non-identity left block even though the
        // augmented matrix has full row rank.
        for i in 0..n {
            for j in 0..n {
                let want_one = i == j;
                if red.at(i, j).is_zero() == want_one {
                    return Err(MatrixError::Singular);
                }
            }
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        red.columns_submatrix(&cols)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Gauss-Jordan; returns (matrix, rank). With `reduce` the result is the
    /// canonical rref, otherwise only the rank is meaningful.
    fn row_reduce(mut self, reduce: bool) -> (Matrix, usize) {
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(p) = (pivot_row..self.rows).find(|&r| !self.at(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(p, pivot_row);
            let inv = self.at(pivot_row, col).inv().expect("pivot nonzero");
            for j in col..self.cols {
                *self.at_mut(pivot_row, j) = self.at(pivot_row, j).mul(&inv);
            }
            let range: Vec<usize> = if reduce {
                (0..self.rows).filter(|&r| r != pivot_row).collect()
            } else {
                (pivot_row + 1..self.rows).collect()
            };
            for r in range {
                let factor = self.at(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in col..self.cols {
                    let sub = factor.mul(self.at(pivot_row, j));
                    *self.at_mut(r, j) = self.at(r, j).sub(&sub);
                }
            }
            pivot_row += 1;
        }
        (self, pivot_row)
    }

    /// Basis of `{x : self * x^T = 0}` as rows, in canonical (rref) form.
    pub fn kernel_basis(&self) -> Matrix {
        let (red, rank) = self.clone().row_reduce(true);
        let mut pivot_cols = Vec::with_capacity(rank);
        let mut r = 0;
        for c in 0..self.cols {
            if r < rank && !red.at(r, c).is_zero() {
                pivot_cols.push(c);
                r += 1;
            }
        }
        let free_cols: Vec<usize> = (0..self.cols).filter(|c| !pivot_cols.contains(c)).collect();
        let mut basis = Matrix::zeros(&self.field, free_cols.len(), self.cols);
        for (bi, &fc) in free_cols.iter().enumerate() {
            *basis.at_mut(bi, fc) = self.field.one();
            for (ri, &pc) in pivot_cols.iter().enumerate() {
                *basis.at_mut(bi, pc) = red.at(ri, fc).neg();
            }
        }
        basis.rref()
    }
}

fn check_column_selection(cols: &[usize], width: usize) -> Result<(), MatrixError> {
    for (i, &c) in cols.iter().enumerate() {
        if c >= width {
            return Err(MatrixError::IndexOutOfRange);
        }
        if i > 0 && cols[i - 1] >= c {
            return Err(MatrixError::IndexOutOfRange);
        }
    }
    Ok(())
}

/// `k x n` Vandermonde-style matrix on evaluation points. The column for a
/// finite point `a` is `(1, a, ..., a^{k-1})^T`; the column for infinity is
/// `(0, ..., 0, 1)^T`, at whatever position infinity occupies.
pub fn vandermonde(
    field: &Field,
    alpha: &[EvalPoint],
    num_rows: usize,
) -> Result<Matrix, MatrixError> {
    assert!(num_rows >= 1);
    if !points_distinct(alpha) {
        return Err(MatrixError::DuplicatePoints);
    }
    let mut m = Matrix::zeros(field, num_rows, alpha.len());
    for (j, pt) in alpha.iter().enumerate() {
        match pt {
            EvalPoint::Finite(a) => {
                let mut acc = field.one();
                for i in 0..num_rows {
                    *m.at_mut(i, j) = acc.clone();
                    acc = acc.mul(a);
                }
            }
            EvalPoint::Infinity => {
                *m.at_mut(num_rows - 1, j) = field.one();
            }
        }
    }
    Ok(m)
}

/// Square Vandermonde on finite points only (rows `1, a, ..., a^{n-1}`).
pub fn vandermonde_full(field: &Field, alpha: &[FieldElement]) -> Result<Matrix, MatrixError> {
    let pts: Vec<EvalPoint> = alpha.iter().cloned().map(EvalPoint::Finite).collect();
    vandermonde(field, &pts, alpha.len())
}

/// Dense row-major matrix over the polynomial ring `F_q[x]`.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Polynomial>,
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{} over {:?}[x]]", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| format!("{}", self.at(i, j)))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl PolyMatrix {
    pub fn new(field: &Field, rows: usize, cols: usize, data: Vec<Polynomial>) -> PolyMatrix {
        assert_eq!(data.len(), rows * cols);
        PolyMatrix {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    /// Constant polynomial matrix from a field matrix.
    pub fn from_matrix(m: &Matrix) -> PolyMatrix {
        let data = m
            .entries()
            .iter()
            .map(|e| Polynomial::constant(e.clone()))
            .collect();
        PolyMatrix::new(m.field(), m.rows(), m.cols(), data)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Polynomial {
        assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Polynomial {
        assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }

    pub fn columns_submatrix(&self, cols: &[usize]) -> Result<PolyMatrix, MatrixError> {
        check_column_selection(cols, self.cols)?;
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for i in 0..self.rows {
            for &j in cols {
                data.push(self.at(i, j).clone());
            }
        }
        Ok(PolyMatrix::new(&self.field, self.rows, cols.len(), data))
    }

    /// Exact determinant in `F_q[x]` by fraction-free Bareiss elimination.
    /// Debug builds cross-check small matrices against Laplace expansion.
    pub fn det(&self) -> Result<Polynomial, MatrixError> {
        if self.rows != self.cols {
            return Err(MatrixError::NotSquare);
        }
        let d = self.bareiss_det();
        #[cfg(debug_assertions)]
        if self.rows <= 4 {
            debug_assert_eq!(d, self.laplace_det(), "Bareiss/Laplace disagree");
        }
        Ok(d)
    }

    fn bareiss_det(&self) -> Polynomial {
        let n = self.rows;
        if n == 0 {
            return Polynomial::one(&self.field);
        }
        let mut m = self.data.clone();
        let at = |m: &Vec<Polynomial>, i: usize, j: usize| m[i * n + j].clone();
        let mut sign_flip = false;
        let mut prev_pivot = Polynomial::one(&self.field);
        for k in 0..n - 1 {
            if at(&m, k, k).is_zero() {
                let Some(swap) = (k + 1..n).find(|&r| !at(&m, r, k).is_zero()) else {
                    return Polynomial::zero(&self.field);
                };
                for j in 0..n {
                    m.swap(k * n + j, swap * n + j);
                }
                sign_flip = !sign_flip;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = at(&m, k, k)
                        .mul(&at(&m, i, j))
                        .sub(&at(&m, i, k).mul(&at(&m, k, j)));
                    m[i * n + j] = num.exact_div(&prev_pivot);
                }
                m[i * n + k] = Polynomial::zero(&self.field);
            }
            prev_pivot = at(&m, k, k);
        }
        let det = at(&m, n - 1, n - 1);
        if sign_flip {
            det.neg()
        } else {
            det
        }
    }

    fn laplace_det(&self) -> Polynomial {
        let n = self.rows;
        if n == 0 {
            return Polynomial::one(&self.field);
        }
        if n == 1 {
            return self.at(0, 0).clone();
        }
        let mut acc = Polynomial::zero(&self.field);
        for j in 0..n {
            if self.at(0, j).is_zero() {
                continue;
            }
            let minor_cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
            let mut data = Vec::with_capacity((n - 1) * (n - 1));
            for i in 1..n {
                for &c in &minor_cols {
                    data.push(self.at(i, c).clone());
                }
            }
            let minor = PolyMatrix::new(&self.field, n - 1, n - 1, data);
            let term = self.at(0, j).mul(&minor.laplace_det());
            acc = if j % 2 == 0 {
                acc.add(&term)
            } else {
                acc.sub(&term)
            };
        }
        acc
    }

    /// Entry-wise evaluation at `beta` after embedding coefficients; realizes
    /// the evaluation homomorphism on whole matrices.
    pub fn eval_at(&self, beta: &FieldElement) -> Result<Matrix, MatrixError> {
        let target = beta.field();
        let data = self
            .data
            .iter()
            .map(|p| p.eval_in(beta))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Matrix::new(target, self.rows, self.cols, data))
    }
}

/// Iterator over k-subsets of `0..n` in lexicographic order.
pub struct Subsets {
    n: usize,
    k: usize,
    current: Option<Vec<usize>>,
}

impl Subsets {
    pub fn new(n: usize, k: usize) -> Subsets {
        let current = if k <= n { Some((0..k).collect()) } else { None };
        Subsets { n, k, current }
    }

    /// `C(n, k)`, saturating.
    pub fn count(n: usize, k: usize) -> u128 {
        if k > n {
            return 0;
        }
        let k = k.min(n - k);
        let mut acc: u128 = 1;
        for i in 0..k {
            acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
        }
        acc
    }
}

impl Iterator for Subsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.current.clone()?;
        // Advance: find the rightmost index that can move up.
        let mut next = current.clone();
        let mut i = self.k;
        loop {
            if i == 0 {
                self.current = None;
                return Some(current);
            }
            i -= 1;
            if next[i] < self.n - self.k + i {
                next[i] += 1;
                for j in i + 1..self.k {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                return Some(current);
            }
        }
    }
}
