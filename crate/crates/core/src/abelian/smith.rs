//! Smith normal form over the integers.
//!
//! Each elimination round picks the nonzero entry of least absolute value in
//! the remaining block as pivot, which keeps intermediate coefficients small.
//! The row transform is tracked together with its inverse so callers can move
//! between original and diagonal coordinates in both directions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// `s = u * m * v` with `u`, `v` unimodular and `s` diagonal,
/// nonnegative, and satisfying `s[0][0] | s[1][1] | ...`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// Diagonal entries `s[i][i]` for `i < min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.s.rows().min(self.s.cols()))
            .map(|i| self.s.get(i, i).clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().take_while(|d| !d.is_zero()).count()
    }
}

struct Reducer {
    s: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
}

impl Reducer {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.s.swap_rows(a, b);
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.s.swap_cols(a, b);
        self.v.swap_cols(a, b);
    }

    /// `row[target] += k * row[source]`
    fn add_row(&mut self, target: usize, source: usize, k: &BigInt) {
        self.s.add_row_multiple(target, source, k);
        self.u.add_row_multiple(target, source, k);
        self.u_inv.add_col_multiple(source, target, &-k);
    }

    fn add_col(&mut self, target: usize, source: usize, k: &BigInt) {
        self.s.add_col_multiple(target, source, k);
        self.v.add_col_multiple(target, source, k);
    }

    fn negate_row(&mut self, r: usize) {
        self.s.negate_row(r);
        self.u.negate_row(r);
        self.u_inv.negate_col(r);
    }

    fn move_to_pivot(&mut self, t: usize, (i, j): (usize, usize)) {
        self.swap_rows(t, i);
        self.swap_cols(t, j);
    }

    /// Clears column `t` below and row `t` right of the pivot by integer
    /// division. Returns false if nonzero remainders are left behind.
    fn eliminate(&mut self, t: usize) -> bool {
        let mut clean = true;
        for i in t + 1..self.s.rows() {
            if self.s.get(i, t).is_zero() {
                continue;
            }
            let q = self.s.get(i, t) / self.s.get(t, t);
            self.add_row(i, t, &-q);
            clean &= self.s.get(i, t).is_zero();
        }
        for j in t + 1..self.s.cols() {
            if self.s.get(t, j).is_zero() {
                continue;
            }
            let q = self.s.get(t, j) / self.s.get(t, t);
            self.add_col(j, t, &-q);
            clean &= self.s.get(t, j).is_zero();
        }
        clean
    }

    fn smallest_in_cross(&self, t: usize) -> (usize, usize) {
        let mut best = (t, t);
        let mut best_abs = self.s.get(t, t).abs();
        for i in t + 1..self.s.rows() {
            let x = self.s.get(i, t);
            if !x.is_zero() && x.abs() < best_abs {
                best_abs = x.abs();
                best = (i, t);
            }
        }
        for j in t + 1..self.s.cols() {
            let x = self.s.get(t, j);
            if !x.is_zero() && x.abs() < best_abs {
                best_abs = x.abs();
                best = (t, j);
            }
        }
        best
    }

    fn smallest_in_block(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<((usize, usize), BigInt)> = None;
        for i in t..self.s.rows() {
            for j in t..self.s.cols() {
                let x = self.s.get(i, j);
                if x.is_zero() {
                    continue;
                }
                let a = x.abs();
                if best.as_ref().is_none_or(|(_, b)| a < *b) {
                    let unit = a.is_one();
                    best = Some(((i, j), a));
                    if unit {
                        return best.map(|(p, _)| p);
                    }
                }
            }
        }
        best.map(|(p, _)| p)
    }

    fn non_divisible_row(&self, t: usize) -> Option<usize> {
        let p = self.s.get(t, t);
        (t + 1..self.s.rows()).find(|&i| (t + 1..self.s.cols()).any(|j| !self.s.get(i, j).is_multiple_of(p)))
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut red = Reducer {
        s: m.clone(),
        u: IntMatrix::identity(rows),
        u_inv: IntMatrix::identity(rows),
        v: IntMatrix::identity(cols),
    };
    for t in 0..rows.min(cols) {
        let Some(p) = red.smallest_in_block(t) else { break };
        red.move_to_pivot(t, p);
        loop {
            if !red.eliminate(t) {
                let p = red.smallest_in_cross(t);
                red.move_to_pivot(t, p);
                continue;
            }
            if let Some(i) = red.non_divisible_row(t) {
                red.add_row(t, i, &BigInt::one());
                continue;
            }
            break;
        }
        if red.s.get(t, t).is_negative() {
            red.negate_row(t);
        }
    }
    SmithForm {
        s: red.s,
        u: red.u,
        u_inv: red.u_inv,
        v: red.v,
    }
}
