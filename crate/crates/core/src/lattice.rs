//! Exponent-vector monomials and exact integer linear algebra.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A monomial in `n` variables, stored as its exponent vector.
///
/// Ordering is graded lexicographic with `x_1 > x_2 > ... > x_n`, arranged so
/// that ascending sorts list lower degrees first and, inside one degree, the
/// lexicographically leading monomial first (`x1^2, x1 x2, ..., xn^2`).
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self { exponents }
    }

    pub fn one(n: usize) -> Self {
        Self { exponents: vec![0; n] }
    }

    /// The `i`-th coordinate variable in `n` variables.
    pub fn variable(n: usize, i: usize) -> Self {
        let mut exponents = vec![0; n];
        exponents[i] = 1;
        Self { exponents }
    }

    pub fn dim(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn into_exponents(self) -> Vec<u32> {
        self.exponents
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn multiply(&self, other: &Monomial) -> Result<Monomial> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// `self` divides `other` (componentwise `<=`). Dimensions must agree.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.dim() == other.dim() && self.exponents.iter().zip(&other.exponents).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exponents: other.exponents.iter().zip(&self.exponents).map(|(a, b)| a - b).collect(),
        })
    }

    /// Render with the given variable names, e.g. `x1^2*y3`.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.exponents.iter().enumerate() {
            let name = names.get(i).cloned().unwrap_or_else(|| format!("z{}", i + 1));
            match e {
                0 => {}
                1 => parts.push(name),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        parts.join("*")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exponents.cmp(&self.exponents))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exponents)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&[]))
    }
}

impl From<Vec<u32>> for Monomial {
    fn from(exponents: Vec<u32>) -> Self {
        Self::new(exponents)
    }
}

/// Graded-lex comparison of raw exponent vectors, consistent with [`Monomial`]'s `Ord`.
pub fn grlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| b.cmp(a))
}

/// Dense matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::from(1);
        }
        m
    }

    /// Build from rows; all rows must have length `cols`.
    pub fn from_rows<T: Into<BigInt> + Clone>(cols: usize, rows: &[Vec<T>]) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: row.len() });
            }
            entries.extend(row.iter().cloned().map(Into::into));
        }
        Ok(Self { rows: rows.len(), cols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows)
            .map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    fn col_axpy(&mut self, target: usize, source: usize, factor: &BigInt) {
        for r in 0..self.rows {
            let delta = factor * &self.entries[r * self.cols + source];
            self.entries[r * self.cols + target] -= delta;
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    fn negate_col(&mut self, c: usize) {
        for r in 0..self.rows {
            let v = &mut self.entries[r * self.cols + c];
            *v = -std::mem::take(v);
        }
    }

    /// Rank, read off the column echelon form used by [`integer_kernel`].
    pub fn rank(&self) -> usize {
        self.cols - integer_kernel(self).len()
    }
}

/// A Z-basis of `{v in Z^n : M v = 0}`.
///
/// Unimodular column operations bring `M` to column echelon form while the
/// same operations are recorded in `U`; the columns of `U` that end up
/// opposite zero columns of `M U` span the kernel lattice.
pub fn integer_kernel(m: &IntegerMatrix) -> Vec<Vec<BigInt>> {
    let n = m.cols();
    let mut a = m.clone();
    let mut u = IntegerMatrix::identity(n);
    let mut pivot = 0usize;

    for r in 0..a.rows() {
        if pivot == n {
            break;
        }
        loop {
            // smallest nonzero entry of row r among the free columns
            let best = (pivot..n)
                .filter(|&c| !a.get(r, c).is_zero())
                .min_by(|&x, &y| a.get(r, x).abs().cmp(&a.get(r, y).abs()));
            let Some(best) = best else { break };
            a.swap_cols(pivot, best);
            u.swap_cols(pivot, best);
            if a.get(r, pivot).is_negative() {
                a.negate_col(pivot);
                u.negate_col(pivot);
            }
            let p = a.get(r, pivot).clone();
            let mut remaining = false;
            for c in pivot + 1..n {
                let entry = a.get(r, c).clone();
                if entry.is_zero() {
                    continue;
                }
                let q = entry.div_floor(&p);
                a.col_axpy(c, pivot, &q);
                u.col_axpy(c, pivot, &q);
                remaining |= !a.get(r, c).is_zero();
            }
            if !remaining {
                pivot += 1;
                break;
            }
        }
    }

    (pivot..n)
        .map(|c| (0..n).map(|r| u.get(r, c).clone()).collect())
        .collect()
}
