//! Exact square-matrix routines over the integers.
//!
//! Elimination skips rows whose entry in the pivot column is already zero,
//! so the sparse tree-shaped matrices produced by plumbing graphs eliminate
//! in roughly quadratic time despite the dense storage.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix {
            n,
            entries: vec![BigInt::zero(); n * n],
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        IntMatrix { n, entries }
    }

    pub fn from_rows(rows: &[Vec<BigInt>]) -> Result<Self> {
        let n = rows.len();
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
        }
        Ok(IntMatrix::from_fn(n, |i, j| rows[i][j].clone()))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.n + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn negated(&self) -> Self {
        IntMatrix {
            n: self.n,
            entries: self.entries.iter().map(|x| -x).collect(),
        }
    }

    /// Principal submatrix on the given indices, in the given order.
    pub fn submatrix(&self, indices: &[usize]) -> Self {
        IntMatrix::from_fn(indices.len(), |i, j| self.get(indices[i], indices[j]).clone())
    }

    /// `x^T M x` for a rational vector.
    pub fn quadratic_form(&self, x: &[Rational]) -> Result<Rational> {
        self.check_len(x.len())?;
        let mut total = Rational::zero();
        for i in 0..self.n {
            for j in 0..self.n {
                let m = self.get(i, j);
                if !m.is_zero() {
                    total += &x[i] * &x[j] * Rational::from_integer(m.clone());
                }
            }
        }
        Ok(total)
    }

    /// `M x` for a rational vector.
    pub fn mul_vec(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        self.check_len(x.len())?;
        Ok((0..self.n)
            .map(|i| {
                let mut acc = Rational::zero();
                for (m, xj) in self.row(i).iter().zip(x) {
                    if !m.is_zero() {
                        acc += Rational::from_integer(m.clone()) * xj;
                    }
                }
                acc
            })
            .collect())
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: len,
            });
        }
        Ok(())
    }

    /// Determinant by Bareiss fraction-free elimination with row exchanges.
    pub fn bareiss_determinant(&self) -> BigInt {
        let n = self.n;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.rows();
        let mut prev = BigInt::one();
        let mut negate = false;
        for k in 0..n {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(i, k);
                        negate = !negate;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[k][k] * &m[i][j] - &m[i][k] * &m[k][j]) / &prev;
                    m[i][j] = v;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        if negate {
            -prev
        } else {
            prev
        }
    }

    /// Pivots of Gaussian elimination in the given order without row
    /// exchanges. The product of the first `k` pivots is the `k`-th leading
    /// principal minor. `None` when a zero pivot appears before the end.
    pub fn elimination_pivots(&self) -> Option<Vec<Rational>> {
        let n = self.n;
        let mut m: Vec<Vec<Rational>> = (0..n)
            .map(|i| self.row(i).iter().cloned().map(Rational::from_integer).collect())
            .collect();
        let mut pivots = Vec::with_capacity(n);
        for k in 0..n {
            let pivot = m[k][k].clone();
            if pivot.is_zero() {
                return None;
            }
            let (top, bottom) = m.split_at_mut(k + 1);
            let pivot_row = &top[k];
            let support: Vec<usize> = (k + 1..n).filter(|&j| !pivot_row[j].is_zero()).collect();
            for row in bottom.iter_mut() {
                if row[k].is_zero() {
                    continue;
                }
                let factor = &row[k] / &pivot;
                for &j in &support {
                    let delta = &factor * &pivot_row[j];
                    row[j] -= delta;
                }
                row[k] = Rational::zero();
            }
            pivots.push(pivot);
        }
        Some(pivots)
    }

    /// True iff every leading principal minor is positive.
    pub fn is_positive_definite(&self) -> bool {
        self.is_symmetric()
            && self
                .elimination_pivots()
                .is_some_and(|p| p.iter().all(Signed::is_positive))
    }

    /// Solves `M x = rhs` exactly. Forward elimination stays in the integers
    /// (cross-multiplication, then each row is divided by its content);
    /// only back substitution uses rationals.
    pub fn solve(&self, rhs: &[BigInt]) -> Result<Vec<Rational>> {
        self.check_len(rhs.len())?;
        let n = self.n;
        let mut rows: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.push(rhs[i].clone());
                r
            })
            .collect();
        forward_eliminate(&mut rows, n)?;
        let mut x = vec![Rational::zero(); n];
        for k in (0..n).rev() {
            let row = &rows[k];
            let mut acc = Rational::from_integer(row[n].clone());
            for j in k + 1..n {
                if !row[j].is_zero() {
                    acc -= Rational::from_integer(row[j].clone()) * &x[j];
                }
            }
            x[k] = acc / Rational::from_integer(row[k].clone());
        }
        Ok(x)
    }

    /// Exact inverse by fraction-free Gauss–Jordan on `[M | I]`.
    pub fn inverse(&self) -> Result<Vec<Vec<Rational>>> {
        let n = self.n;
        let mut rows: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
                r
            })
            .collect();
        forward_eliminate(&mut rows, n)?;
        for k in (0..n).rev() {
            let (top, rest) = rows.split_at_mut(k);
            let pivot_row = &rest[0];
            for row in top.iter_mut() {
                if !row[k].is_zero() {
                    cancel(row, pivot_row, k);
                }
            }
        }
        Ok(rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let d = &row[i];
                row[n..].iter().map(|x| Rational::new(x.clone(), d.clone())).collect()
            })
            .collect())
    }
}

/// Reduces the leading `n` columns of `rows` to upper-triangular form with
/// partial pivoting on the first nonzero entry.
fn forward_eliminate(rows: &mut [Vec<BigInt>], n: usize) -> Result<()> {
    for k in 0..n {
        let pivot = (k..n).find(|&i| !rows[i][k].is_zero()).ok_or(Error::Singular)?;
        rows.swap(k, pivot);
        let (top, bottom) = rows.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in bottom.iter_mut() {
            if !row[k].is_zero() {
                cancel(row, pivot_row, k);
            }
        }
    }
    Ok(())
}

/// `row <- pivot_row[k] * row - row[k] * pivot_row`, then strips the content.
fn cancel(row: &mut [BigInt], pivot_row: &[BigInt], k: usize) {
    let g = pivot_row[k].gcd(&row[k]);
    let scale = &pivot_row[k] / &g;
    let factor = &row[k] / &g;
    for (x, p) in row.iter_mut().zip(pivot_row) {
        if p.is_zero() {
            if !x.is_zero() {
                *x *= &scale;
            }
        } else {
            *x = &*x * &scale - &factor * p;
        }
    }
    let content = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !content.is_zero() && !content.is_one() {
        for x in row.iter_mut() {
            *x /= &content;
        }
    }
}
