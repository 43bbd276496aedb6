//! Exact dense linear algebra over any [`FieldSpec`]: determinant, rank and
//! linear solve. Finite fields use Gaussian elimination with pivoting; the
//! rationals use fraction-free Bareiss elimination on a common-denominator
//! integer matrix so intermediate fractions never blow up.

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub field: FieldSpec,
    pub rows: usize,
    pub cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn new(field: FieldSpec, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        for e in &entries {
            if !field.contains(e) {
                return Err(Error::FieldMismatch(field.to_string()));
            }
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        let entries = vec![field.zero(); rows * cols];
        Matrix {
            field,
            rows,
            cols,
            entries,
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            let one = m.field.one();
            m.set(i, i, one);
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Exact determinant.
    pub fn determinant(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        match self.field {
            FieldSpec::Rational => self.determinant_bareiss(),
            _ => self.determinant_gauss(),
        }
    }

    fn determinant_gauss(&self) -> Result<Scalar> {
        let f = &self.field;
        let n = self.rows;
        let mut a = self.entries.clone();
        let at = |a: &Vec<Scalar>, i: usize, j: usize| a[i * n + j].clone();
        let mut det = f.one();
        for k in 0..n {
            let pivot_row = (k..n).find(|&r| !f.is_zero(&at(&a, r, k)));
            let Some(pr) = pivot_row else {
                return Ok(f.zero());
            };
            if pr != k {
                for j in 0..n {
                    a.swap(k * n + j, pr * n + j);
                }
                det = f.neg(&det)?;
            }
            let pivot = at(&a, k, k);
            det = f.mul(&det, &pivot)?;
            let pinv = f.inv(&pivot)?;
            for r in k + 1..n {
                let factor = f.mul(&at(&a, r, k), &pinv)?;
                if f.is_zero(&factor) {
                    continue;
                }
                for j in k..n {
                    let sub = f.mul(&factor, &at(&a, k, j))?;
                    a[r * n + j] = f.sub(&at(&a, r, j), &sub)?;
                }
            }
        }
        Ok(det)
    }

    fn determinant_bareiss(&self) -> Result<Scalar> {
        let n = self.rows;
        // clear denominators row by row, tracking the total scale factor
        let mut ints = vec![BigInt::zero(); n * n];
        let mut scale = BigInt::one();
        for i in 0..n {
            let mut lcm = BigInt::one();
            for j in 0..n {
                let q = self.get(i, j).as_ratio().expect("rational matrix");
                lcm = lcm.lcm(q.denom());
            }
            for j in 0..n {
                let q = self.get(i, j).as_ratio().unwrap();
                ints[i * n + j] = q.numer() * (&lcm / q.denom());
            }
            scale *= &lcm;
        }
        let mut sign = 1i64;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if ints[k * n + k].is_zero() {
                let swap = (k + 1..n).find(|&r| !ints[r * n + k].is_zero());
                let Some(sr) = swap else {
                    return Ok(Scalar::Ratio(BigRational::zero()));
                };
                for j in 0..n {
                    ints.swap(k * n + j, sr * n + j);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &ints[i * n + j] * &ints[k * n + k]
                        - &ints[i * n + k] * &ints[k * n + j];
                    // Bareiss division is exact
                    ints[i * n + j] = num / &prev;
                }
                ints[i * n + k] = BigInt::zero();
            }
            prev = ints[k * n + k].clone();
        }
        let det_int = ints[(n - 1) * n + (n - 1)].clone() * BigInt::from(sign);
        Ok(Scalar::Ratio(BigRational::new(det_int, scale)))
    }

    /// Row rank by elimination over the field.
    pub fn rank(&self) -> Result<usize> {
        let f = &self.field;
        let (rows, cols) = (self.rows, self.cols);
        let mut a = self.entries.clone();
        let at = |a: &Vec<Scalar>, i: usize, j: usize| a[i * cols + j].clone();
        let mut rank = 0;
        for col in 0..cols {
            let pivot_row = (rank..rows).find(|&r| !f.is_zero(&at(&a, r, col)));
            let Some(pr) = pivot_row else { continue };
            if pr != rank {
                for j in 0..cols {
                    a.swap(rank * cols + j, pr * cols + j);
                }
            }
            let pinv = f.inv(&at(&a, rank, col))?;
            for r in 0..rows {
                if r == rank || f.is_zero(&at(&a, r, col)) {
                    continue;
                }
                let factor = f.mul(&at(&a, r, col), &pinv)?;
                for j in 0..cols {
                    let sub = f.mul(&factor, &at(&a, rank, j))?;
                    a[r * cols + j] = f.sub(&at(&a, r, j), &sub)?;
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        Ok(rank)
    }

    /// Exact linear solve of `self * x = b`.
    pub fn solve(&self, b: &[Scalar]) -> Result<SolveOutcome> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "rhs has {} entries for {} rows",
                b.len(),
                self.rows
            )));
        }
        let f = &self.field;
        let (rows, cols) = (self.rows, self.cols);
        let width = cols + 1;
        let mut a: Vec<Scalar> = Vec::with_capacity(rows * width);
        for i in 0..rows {
            for j in 0..cols {
                a.push(self.get(i, j).clone());
            }
            a.push(b[i].clone());
        }
        let at = |a: &Vec<Scalar>, i: usize, j: usize| a[i * width + j].clone();
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut rank = 0;
        for col in 0..cols {
            let pivot_row = (rank..rows).find(|&r| !f.is_zero(&at(&a, r, col)));
            let Some(pr) = pivot_row else { continue };
            if pr != rank {
                for j in 0..width {
                    a.swap(rank * width + j, pr * width + j);
                }
            }
            let pinv = f.inv(&at(&a, rank, col))?;
            for j in 0..width {
                let v = f.mul(&at(&a, rank, j), &pinv)?;
                a[rank * width + j] = v;
            }
            for r in 0..rows {
                if r == rank || f.is_zero(&at(&a, r, col)) {
                    continue;
                }
                let factor = at(&a, r, col);
                for j in 0..width {
                    let sub = f.mul(&factor, &at(&a, rank, j))?;
                    a[r * width + j] = f.sub(&at(&a, r, j), &sub)?;
                }
            }
            pivots.push((rank, col));
            rank += 1;
            if rank == rows {
                break;
            }
        }
        for r in rank..rows {
            if !f.is_zero(&at(&a, r, cols)) {
                return Ok(SolveOutcome::NoSolution);
            }
        }
        if rank < cols {
            return Ok(SolveOutcome::Underdetermined);
        }
        let mut x = vec![f.zero(); cols];
        for &(r, c) in &pivots {
            x[c] = at(&a, r, cols);
        }
        Ok(SolveOutcome::Unique(x))
    }

    /// CSV rendering with canonical scalar strings.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    Unique(Vec<Scalar>),
    NoSolution,
    Underdetermined,
}
