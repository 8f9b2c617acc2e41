//! Dense exact matrices and fraction-free linear solving.
//!
//! Systems are solved by clearing denominators row-wise and running
//! Bareiss elimination over the integers, which keeps intermediate entry
//! growth polynomial instead of exponential. Back substitution returns to
//! rationals.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::Rat;

/// Row-major matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut m = Self::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn diagonal(entries: &[Rat]) -> Self {
        let mut m = Self::zero(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols);
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + rhs.get(i, j))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols);
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - rhs.get(i, j))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) * c)
    }

    /// Matrix product through cleared integers: denominators are removed
    /// once per row of `self` and column of `rhs`, the integer product is
    /// taken without any gcd work, and each output entry is reduced once.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows);
        let inner = self.cols;
        let row_lcm: Vec<BigInt> = (0..self.rows)
            .map(|i| {
                let mut l = BigInt::one();
                for k in 0..inner {
                    l = l.lcm(self.get(i, k).denom());
                }
                l
            })
            .collect();
        let col_lcm: Vec<BigInt> = (0..rhs.cols)
            .map(|j| {
                let mut l = BigInt::one();
                for k in 0..inner {
                    l = l.lcm(rhs.get(k, j).denom());
                }
                l
            })
            .collect();
        let a: Vec<BigInt> = (0..self.rows * inner)
            .map(|idx| {
                let (i, k) = (idx / inner, idx % inner);
                let v = self.get(i, k);
                v.numer() * (&row_lcm[i] / v.denom())
            })
            .collect();
        let b: Vec<BigInt> = (0..inner * rhs.cols)
            .map(|idx| {
                let (k, j) = (idx / rhs.cols, idx % rhs.cols);
                let v = rhs.get(k, j);
                v.numer() * (&col_lcm[j] / v.denom())
            })
            .collect();
        let mut out = Self::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = BigInt::zero();
                for k in 0..inner {
                    let x = &a[i * inner + k];
                    if !x.is_zero() {
                        acc += x * &b[k * rhs.cols + j];
                    }
                }
                if !acc.is_zero() {
                    out.set(i, j, Rat::new(acc, &row_lcm[i] * &col_lcm[j]));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for j in 0..self.cols {
                    acc += self.get(i, j) * &v[j];
                }
                acc
            })
            .collect()
    }

    pub fn column(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn set_column(&mut self, j: usize, v: &[Rat]) {
        assert_eq!(v.len(), self.rows);
        for (i, x) in v.iter().enumerate() {
            self.set(i, j, x.clone());
        }
    }

    /// Leading principal block of size `k`.
    pub fn leading_block(&self, k: usize) -> Self {
        Self::from_fn(k, k, |i, j| self.get(i, j).clone())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.get(i, j).is_one()
                    } else {
                        self.get(i, j).is_zero()
                    }
                })
            })
    }
}

/// Solve `A X = B` exactly for square `A`; `B` may carry several columns.
pub fn solve(a: &RatMat, b: &RatMat) -> Result<RatMat> {
    assert_eq!(a.rows, a.cols, "solve wants a square matrix");
    assert_eq!(a.rows, b.rows);
    let n = a.rows;
    let k = b.cols;
    if n == 0 {
        return Ok(RatMat::zero(0, k));
    }

    // Clear denominators per row over the augmented matrix [A | B].
    let width = n + k;
    let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut lcm = BigInt::one();
        for j in 0..n {
            lcm = lcm.lcm(a.get(i, j).denom());
        }
        for j in 0..k {
            lcm = lcm.lcm(b.get(i, j).denom());
        }
        let mut row: Vec<BigInt> = Vec::with_capacity(width);
        for j in 0..n {
            let v = a.get(i, j);
            row.push(v.numer() * (&lcm / v.denom()));
        }
        for j in 0..k {
            let v = b.get(i, j);
            row.push(v.numer() * (&lcm / v.denom()));
        }
        m.push(row);
    }

    // Bareiss fraction-free elimination. Pivoting on the smallest
    // nonzero magnitude keeps intermediate growth down.
    let mut prev = BigInt::one();
    for col in 0..n {
        let pivot_row = (col..n)
            .filter(|&i| !m[i][col].is_zero())
            .min_by(|&a, &b| m[a][col].abs().cmp(&m[b][col].abs()))
            .ok_or(Error::SingularSystem)?;
        m.swap(col, pivot_row);
        for i in (col + 1)..n {
            for j in (col + 1)..width {
                let num = &m[col][col] * &m[i][j] - &m[i][col] * &m[col][j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                m[i][j] = q;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[col][col].clone();
    }

    // Back substitution in rationals.
    let mut x = RatMat::zero(n, k);
    for j in 0..k {
        for i in (0..n).rev() {
            let mut acc = Rat::from_integer(m[i][n + j].clone());
            for l in (i + 1)..n {
                acc -= Rat::from_integer(m[i][l].clone()) * x.get(l, j);
            }
            let v = acc / Rat::from_integer(m[i][i].clone());
            x.set(i, j, v);
        }
    }
    Ok(x)
}

/// Exact inverse of a square matrix.
pub fn inverse(a: &RatMat) -> Result<RatMat> {
    solve(a, &RatMat::identity(a.rows))
}
