//! Dense integer matrices with arbitrary-precision entries.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Row-major matrix over the integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<BigInt>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must equal rows * cols");
        Self { rows, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds a matrix from small integer rows. All rows must have equal length.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            let row = row.as_ref();
            assert_eq!(row.len(), cols, "ragged rows");
            data.extend(row.iter().map(|&x| BigInt::from(x)));
        }
        Self {
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Builds a `rows x columns.len()` matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Self {
        let cols = columns.len();
        let mut m = Self::zeros(rows, cols);
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (r, x) in col.iter().enumerate() {
                m.data[r * cols + c] = x.clone();
            }
        }
        m
    }

    pub fn diagonal(values: &[BigInt]) -> Self {
        let n = values.len();
        let mut m = Self::zeros(n, n);
        for (i, v) in values.iter().enumerate() {
            m.data[i * n + i] = v.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: BigInt) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<BigInt>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = BigInt::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        Self::from_fn(rows.len(), self.cols, |r, c| self.get(rows[r], c).clone())
    }

    pub fn select_cols(&self, cols: &[usize]) -> Self {
        Self::from_fn(self.rows, cols.len(), |r, c| self.get(r, cols[c]).clone())
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Self::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        })
    }

    /// Block-diagonal sum of `copies` copies of `self`.
    pub fn block_diagonal(&self, copies: usize) -> Self {
        let mut m = Self::zeros(self.rows * copies, self.cols * copies);
        for b in 0..copies {
            for r in 0..self.rows {
                for c in 0..self.cols {
                    let x = self.get(r, c);
                    if !x.is_zero() {
                        m.set(b * self.rows + r, b * self.cols + c, x.clone());
                    }
                }
            }
        }
        m
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// `row[target] += k * row[source]`.
    pub fn add_row_multiple(&mut self, target: usize, source: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let s = &self.data[source * self.cols + c];
            if !s.is_zero() {
                let delta = s * k;
                self.data[target * self.cols + c] += delta;
            }
        }
    }

    /// `col[target] += k * col[source]`.
    pub fn add_col_multiple(&mut self, target: usize, source: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let s = &self.data[r * self.cols + source];
            if !s.is_zero() {
                let delta = s * k;
                self.data[r * self.cols + target] += delta;
            }
        }
    }

    pub fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let x = &mut self.data[r * self.cols + c];
            *x = -std::mem::take(x);
        }
    }

    pub fn negate_col(&mut self, c: usize) {
        for r in 0..self.rows {
            let x = &mut self.data[r * self.cols + c];
            *x = -std::mem::take(x);
        }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        sign * a.get(n - 1, n - 1)
    }

    /// Largest absolute entry, zero for an empty matrix.
    pub fn max_abs(&self) -> BigInt {
        self.data.iter().map(|x| x.abs()).max().unwrap_or_default()
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        out.data[r * rhs.cols + c] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix({}x{}) {}", self.rows, self.cols, self)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (i, x) in self.row(r).iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_transpose() {
        let a = IntMatrix::from_rows(&[[1, 2, 3], [4, 5, 6]]);
        let b = IntMatrix::from_rows(&[[1, 0], [0, 1], [1, 1]]);
        assert_eq!(&a * &b, IntMatrix::from_rows(&[[4, 5], [10, 11]]));
        assert_eq!(a.transpose().transpose(), a);
    }

    #[test]
    fn bareiss_determinant() {
        let m = IntMatrix::from_rows(&[[2, -1, 0], [-1, 2, -1], [0, -1, 2]]);
        assert_eq!(m.determinant(), BigInt::from(4));
        let singular = IntMatrix::from_rows(&[[1, 2], [2, 4]]);
        assert!(singular.determinant().is_zero());
        let needs_swap = IntMatrix::from_rows(&[[0, 1], [1, 0]]);
        assert_eq!(needs_swap.determinant(), BigInt::from(-1));
    }

    #[test]
    fn empty_shapes() {
        let m = IntMatrix::zeros(0, 3);
        assert_eq!(m.transpose().rows(), 3);
        assert!(m.mul_vec(&[BigInt::one(), BigInt::zero(), BigInt::zero()]).is_empty());
        assert_eq!(IntMatrix::identity(0).determinant(), BigInt::one());
    }
}
