use std::fmt;

use super::{Field, LinalgError, Ring};

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T: Ring> {
    rows: usize,
    cols: usize,
    ctx: T::Ctx,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize, ctx: T::Ctx) -> Self {
        Matrix {
            rows,
            cols,
            ctx,
            data: vec![T::zero_in(ctx); rows * cols],
        }
    }

    pub fn identity(n: usize, ctx: T::Ctx) -> Self {
        let mut out = Self::zeros(n, n, ctx);
        for i in 0..n {
            out.data[i * n + i] = T::one_in(ctx);
        }
        out
    }

    pub fn from_fn(rows: usize, cols: usize, ctx: T::Ctx, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            ctx,
            data,
        }
    }

    /// Builds a matrix from rows; all rows must have length `cols` and all
    /// entries must live in `ctx`.
    pub fn from_rows(rows: Vec<Vec<T>>, cols: usize, ctx: T::Ctx) -> Result<Self, LinalgError> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(LinalgError::Dimension(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for x in row {
                if x.ctx() != ctx {
                    return Err(LinalgError::Dimension(format!(
                        "entry in row {i} has context {:?}, expected {ctx:?}",
                        x.ctx()
                    )));
                }
                data.push(x);
            }
        }
        Ok(Matrix {
            rows: n,
            cols,
            ctx,
            data,
        })
    }

    /// Matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_columns(columns: &[Vec<T>], rows: usize, ctx: T::Ctx) -> Self {
        Self::from_fn(rows, columns.len(), ctx, |i, j| columns[j][i].clone())
    }

    pub fn column_vector(v: Vec<T>, ctx: T::Ctx) -> Self {
        let n = v.len();
        Matrix {
            rows: n,
            cols: 1,
            ctx,
            data: v,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ctx(&self) -> T::Ctx {
        self.ctx
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<T>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(T::is_zero_elem)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, self.ctx, |i, j| self.get(j, i).clone())
    }

    pub fn map<U: Ring>(&self, ctx: U::Ctx, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix::from_fn(self.rows, self.cols, ctx, |i, j| f(self.get(i, j)))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols, self.ctx);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero_elem() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero_elem() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = out.data[idx].plus(&a.times(b));
                }
            }
        }
        Ok(out)
    }

    /// Product; panics on a shape mismatch.
    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("matrix shape mismatch")
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero_in(self.ctx);
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero_elem() && !b.is_zero_elem() {
                        acc = acc.plus(&a.times(b));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, self.ctx, |i, j| {
            self.get(i, j).plus(other.get(i, j))
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, self.ctx, |i, j| {
            self.get(i, j).minus(other.get(i, j))
        })
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.rows, self.cols, self.ctx, |i, j| self.get(i, j).negated())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_fn(self.rows, self.cols, self.ctx, |i, j| self.get(i, j).times(c))
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Self::from_fn(self.rows, self.cols + other.cols, self.ctx, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        Self::from_fn(self.rows + other.rows, self.cols, self.ctx, |i, j| {
            if i < self.rows {
                self.get(i, j).clone()
            } else {
                other.get(i - self.rows, j).clone()
            }
        })
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Self::from_fn(idx.len(), self.cols, self.ctx, |i, j| self.get(idx[i], j).clone())
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        Self::from_fn(self.rows, idx.len(), self.ctx, |i, j| self.get(i, idx[j]).clone())
    }

    pub fn block_diagonal(&self, other: &Self) -> Self {
        Self::from_fn(self.rows + other.rows, self.cols + other.cols, self.ctx, |i, j| {
            match (i < self.rows, j < self.cols) {
                (true, true) => self.get(i, j).clone(),
                (false, false) => other.get(i - self.rows, j - self.cols).clone(),
                _ => T::zero_in(self.ctx),
            }
        })
    }

    /// Bilinear pairing `uᵀ · self · v`.
    pub fn bilinear(&self, u: &[T], v: &[T]) -> T {
        let sv = self.mul_vec(v);
        let mut acc = T::zero_in(self.ctx);
        for (a, b) in u.iter().zip(&sv) {
            acc = acc.plus(&a.times(b));
        }
        acc
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

impl<T: Field> Matrix<T> {
    /// Reduced row-echelon form together with the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a.get(i, c).is_zero_elem()) else {
                continue;
            };
            if p != r {
                for j in 0..a.cols {
                    a.data.swap(p * a.cols + j, r * a.cols + j);
                }
            }
            let inv = a.get(r, c).inverse();
            for j in c..a.cols {
                let v = a.get(r, j).times(&inv);
                a.set(r, j, v);
            }
            for i in 0..a.rows {
                if i == r {
                    continue;
                }
                let f = a.get(i, c).clone();
                if f.is_zero_elem() {
                    continue;
                }
                for j in c..a.cols {
                    let rv = a.get(r, j);
                    if rv.is_zero_elem() {
                        continue;
                    }
                    let v = a.get(i, j).minus(&f.times(rv));
                    a.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    pub fn echelon(&self) -> Self {
        self.rref().0
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space, as the columns of the returned matrix.
    pub fn kernel_basis(&self) -> Self {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Self::zeros(self.cols, free.len(), self.ctx);
        for (k, &f) in free.iter().enumerate() {
            out.set(f, k, T::one_in(self.ctx));
            for (row, &p) in pivots.iter().enumerate() {
                out.set(p, k, r.get(row, f).negated());
            }
        }
        out
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Self::identity(n, self.ctx));
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Self::from_fn(n, n, self.ctx, |i, j| r.get(i, n + j).clone()))
    }

    pub fn determinant(&self) -> T {
        assert!(self.is_square(), "determinant of non-square matrix");
        let mut a = self.clone();
        let n = a.rows;
        let mut det = T::one_in(self.ctx);
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !a.get(i, c).is_zero_elem()) else {
                return T::zero_in(self.ctx);
            };
            if p != c {
                for j in 0..n {
                    a.data.swap(p * n + j, c * n + j);
                }
                det = det.negated();
            }
            let piv = a.get(c, c).clone();
            det = det.times(&piv);
            let inv = piv.inverse();
            for i in c + 1..n {
                let f = a.get(i, c).times(&inv);
                if f.is_zero_elem() {
                    continue;
                }
                for j in c..n {
                    let v = a.get(i, j).minus(&f.times(a.get(c, j)));
                    a.set(i, j, v);
                }
            }
        }
        det
    }

    /// Some solution `x` of `self · x = b`, if one exists.
    pub fn solve(&self, b: &[T]) -> Option<Vec<T>> {
        assert_eq!(b.len(), self.rows);
        let aug = self.hstack(&Self::column_vector(b.to_vec(), self.ctx));
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![T::zero_in(self.ctx); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.get(row, self.cols).clone();
        }
        Some(x)
    }

    /// Leading principal minors `det(A[..k, ..k])` for `k = 1..=n`.
    pub fn leading_minors(&self) -> Vec<T> {
        (1..=self.rows.min(self.cols))
            .map(|k| {
                let idx: Vec<usize> = (0..k).collect();
                self.select_rows(&idx).select_columns(&idx).determinant()
            })
            .collect()
    }
}

impl<T: Ring + fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}
