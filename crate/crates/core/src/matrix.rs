//! Dense matrices over an exact integer scalar.
//!
//! Alongside the ring operations this module carries the fraction-free
//! (Bareiss) algorithms: exact determinants, cofactors, and kernel vectors
//! with no intermediate rationals. Sizes in this crate stay small (a graph
//! with m edges produces 2m x 2m matrices, m <= ~100 at desk scale), so
//! everything is dense and row-major.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("matrix is not square: {rows} x {cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {left_rows}x{left_cols} vs {right_rows}x{right_cols}")]
    DimensionMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    #[error("rows have unequal lengths")]
    RaggedRows,
    #[error("index ({row}, {col}) out of bounds for {rows}x{cols} matrix")]
    OutOfBounds {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
}

/// Dense row-major matrix with exact entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

/// Exact kernel witness: an integer numerator vector over a positive common
/// denominator. Fraction-free elimination rescales to integers, so the
/// denominator is 1 after construction; the field is kept so callers can
/// treat the witness as the rational vector it represents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalVector<T> {
    pub numerators: Vec<T>,
    pub denominator: T,
}

impl<T: Scalar> Matrix<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, MatrixError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(MatrixError::RaggedRows);
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn diagonal(entries: Vec<T>) -> Self {
        let n = entries.len();
        let mut m = Matrix::zero(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m.data[i * n + i] = e;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &T {
        &self.data[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: T) {
        self.data[row * self.cols + col] = value;
    }

    pub fn row(&self, row: usize) -> &[T] {
        &self.data[row * self.cols..(row + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(T::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a.clone() + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a.clone() - b)
    }

    pub fn neg(&self) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a.clone()).collect(),
        }
    }

    fn zip(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "matrix dimension mismatch"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(other.data.iter())
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    /// Exact matrix product; skips zero entries, which matters for the
    /// sparse 0/1 edge matrices.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix dimension mismatch");
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cell = &mut out.data[i * out.cols + j];
                    *cell = std::mem::replace(cell, T::zero()) + a.clone() * b;
                }
            }
        }
        out
    }

    /// Matrix-vector product with zero skipping.
    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "matrix dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if a.is_zero() || x.is_zero() {
                        continue;
                    }
                    acc = acc + a.clone() * x;
                }
                acc
            })
            .collect()
    }

    /// Copy out the sub-block with the given half-open row/column ranges.
    pub fn block(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        assert!(rows.end <= self.rows && cols.end <= self.cols, "block out of range");
        Matrix::from_fn(rows.len(), cols.len(), |i, j| {
            self.get(rows.start + i, cols.start + j).clone()
        })
    }

    /// Assemble a square matrix from four equally sized square blocks.
    pub fn from_blocks(tl: &Self, tr: &Self, bl: &Self, br: &Self) -> Self {
        let n = tl.rows;
        assert!(
            [tl, tr, bl, br]
                .iter()
                .all(|b| b.rows == n && b.cols == n),
            "blocks must be square and equally sized"
        );
        Matrix::from_fn(2 * n, 2 * n, |i, j| match (i < n, j < n) {
            (true, true) => tl.get(i, j).clone(),
            (true, false) => tr.get(i, j - n).clone(),
            (false, true) => bl.get(i - n, j).clone(),
            (false, false) => br.get(i - n, j - n).clone(),
        })
    }

    pub fn row_sums(&self) -> Vec<T> {
        (0..self.rows)
            .map(|i| self.row(i).iter().fold(T::zero(), |acc, x| acc + x))
            .collect()
    }

    pub fn col_sums(&self) -> Vec<T> {
        (0..self.cols)
            .map(|j| (0..self.rows).fold(T::zero(), |acc, i| acc + self.get(i, j)))
            .collect()
    }

    /// Largest absolute row sum; every eigenvalue lies within this bound,
    /// so it caps integer root scans.
    pub fn row_abs_bound(&self) -> T {
        (0..self.rows)
            .map(|i| self.row(i).iter().fold(T::zero(), |acc, x| acc + x.abs()))
            .max()
            .unwrap_or_else(T::zero)
    }

    /// Exact determinant by fraction-free Bareiss elimination.
    pub fn determinant(&self) -> Result<T, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(T::one());
        }
        let mut w = self.data.clone();
        let at = |w: &Vec<T>, i: usize, j: usize| w[i * n + j].clone();
        let mut sign_negative = false;
        let mut prev = T::one();
        for k in 0..n {
            // first nonzero pivot in column order keeps the result deterministic
            let Some(pivot_row) = (k..n).find(|&r| !w[r * n + k].is_zero()) else {
                return Ok(T::zero());
            };
            if pivot_row != k {
                for j in 0..n {
                    w.swap(k * n + j, pivot_row * n + j);
                }
                sign_negative = !sign_negative;
            }
            if k == n - 1 {
                break;
            }
            let pivot = at(&w, k, k);
            for i in k + 1..n {
                let lead = at(&w, i, k);
                for j in k + 1..n {
                    let num = at(&w, i, j) * &pivot - lead.clone() * &w[k * n + j];
                    w[i * n + j] = num / prev.clone();
                }
                w[i * n + k] = T::zero();
            }
            prev = pivot;
        }
        let det = at(&w, n - 1, n - 1);
        Ok(if sign_negative { -det } else { det })
    }

    /// Signed cofactor `(-1)^{i+j} * det(minor(i, j))`.
    pub fn cofactor(&self, row: usize, col: usize) -> Result<T, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if row >= self.rows || col >= self.cols {
            return Err(MatrixError::OutOfBounds {
                row,
                col,
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let minor = Matrix::from_fn(n - 1, n - 1, |i, j| {
            let si = if i < row { i } else { i + 1 };
            let sj = if j < col { j } else { j + 1 };
            self.get(si, sj).clone()
        });
        let det = minor.determinant()?;
        Ok(if (row + col).is_multiple_of(2) { det } else { -det })
    }

    /// A nonzero exact kernel vector if the matrix is singular.
    ///
    /// Fraction-free elimination with first-nonzero pivoting, then integer
    /// back-substitution (the partial solution is rescaled by each pivot
    /// instead of dividing), and a final gcd reduction. Deterministic.
    pub fn kernel_vector(&self) -> Result<Option<RationalVector<T>>, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(None);
        }
        let mut w: Vec<Vec<T>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        // (row, pivot column) pairs in elimination order
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut rank = 0;
        let mut prev = T::one();
        for col in 0..n {
            let Some(pr) = (rank..n).find(|&r| !w[r][col].is_zero()) else {
                continue;
            };
            w.swap(rank, pr);
            let pivot_row = w[rank].clone();
            let pivot = pivot_row[col].clone();
            for row in w.iter_mut().skip(rank + 1) {
                let lead = row[col].clone();
                if lead.is_zero() {
                    // still run the untouched row through the Bareiss scale
                    for cell in row.iter_mut().take(n).skip(col + 1) {
                        let num = cell.clone() * &pivot;
                        *cell = num / prev.clone();
                    }
                } else {
                    for j in col + 1..n {
                        let num = row[j].clone() * &pivot - lead.clone() * &pivot_row[j];
                        row[j] = num / prev.clone();
                    }
                }
                row[col] = T::zero();
            }
            prev = pivot;
            pivots.push((rank, col));
            rank += 1;
        }
        if rank == n {
            return Ok(None);
        }
        let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
        let free_col = (0..n)
            .find(|c| !pivot_cols.contains(c))
            .expect("rank < n implies a free column");
        let mut x = vec![T::zero(); n];
        x[free_col] = T::one();
        for &(row, col) in pivots.iter().rev() {
            if col > free_col {
                continue; // trailing pivots depend only on later free columns, all zero
            }
            let mut numer = T::zero();
            for j in col + 1..n {
                if w[row][j].is_zero() || x[j].is_zero() {
                    continue;
                }
                numer = numer - w[row][j].clone() * &x[j];
            }
            let pivot = w[row][col].clone();
            for (j, xj) in x.iter_mut().enumerate() {
                if j != col && !xj.is_zero() {
                    *xj = xj.clone() * &pivot;
                }
            }
            x[col] = numer;
        }
        // final integer rescale: divide by the gcd, make the first nonzero positive
        let mut g = T::zero();
        for v in &x {
            g = g.gcd(v);
        }
        debug_assert!(!g.is_zero(), "kernel vector must be nonzero");
        let flip = x
            .iter()
            .find(|v| !v.is_zero())
            .is_some_and(|v| v.is_negative());
        for v in x.iter_mut() {
            *v = v.clone() / g.clone();
            if flip {
                *v = -v.clone();
            }
        }
        debug_assert!(self.mul_vec(&x).iter().all(T::is_zero));
        Ok(Some(RationalVector {
            numerators: x,
            denominator: T::one(),
        }))
    }

    /// True iff some power of the matrix vanishes; the nilpotency index of
    /// an order-k matrix is at most k, so square repeatedly until the
    /// exponent reaches k.
    pub fn is_nilpotent(&self) -> Result<bool, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let k = self.rows;
        if k == 0 {
            return Ok(true);
        }
        let mut power = self.clone();
        let mut exponent = 1usize;
        while exponent < k {
            if power.is_zero() {
                return Ok(true);
            }
            power = power.mul(&power);
            exponent *= 2;
        }
        Ok(power.is_zero())
    }

    /// Render with right-aligned columns and optional row/column labels.
    /// `split` draws a separator after that many rows and columns.
    pub fn render(&self, labels: Option<&[String]>, split: Option<usize>) -> String {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.to_string()).collect())
            .collect();
        let label_width = labels
            .map(|ls| ls.iter().map(String::len).max().unwrap_or(0))
            .unwrap_or(0);
        let mut col_width = vec![0usize; self.cols];
        for (j, w) in col_width.iter_mut().enumerate() {
            *w = cells.iter().map(|r| r[j].len()).max().unwrap_or(1);
            if let Some(ls) = labels {
                *w = (*w).max(ls.get(j).map_or(0, String::len));
            }
        }
        let mut out = String::new();
        if let Some(ls) = labels {
            out.push_str(&" ".repeat(label_width));
            for (j, w) in col_width.iter().enumerate() {
                if split == Some(j) && j > 0 {
                    out.push_str(" |");
                }
                out.push_str(&format!(" {:>width$}", ls.get(j).map_or("", |s| s), width = w));
            }
            out.push('\n');
        }
        for (i, row) in cells.iter().enumerate() {
            if split == Some(i) && i > 0 {
                let mut rule_len = label_width;
                for (j, w) in col_width.iter().enumerate() {
                    rule_len += w + 1;
                    if split == Some(j) && j > 0 {
                        rule_len += 2;
                    }
                }
                out.push_str(&"-".repeat(rule_len));
                out.push('\n');
            }
            if let Some(ls) = labels {
                out.push_str(&format!("{:<width$}", ls.get(i).map_or("", |s| s), width = label_width));
            }
            for (j, cell) in row.iter().enumerate() {
                if split == Some(j) && j > 0 {
                    out.push_str(" |");
                }
                out.push_str(&format!(" {:>width$}", cell, width = col_width[j]));
            }
            out.push('\n');
        }
        out
    }
}

impl<T: Scalar> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(None, None))
    }
}

// JSON schema: row-major array of arrays of decimal integer strings.
impl<T: Scalar> Serialize for Matrix<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.to_string()).collect())
            .collect();
        rows.serialize(serializer)
    }
}

impl<'de, T> Deserialize<'de> for Matrix<T>
where
    T: Scalar + FromStr,
    <T as FromStr>::Err: fmt::Display,
{
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<String>>::deserialize(deserializer)?;
        let parsed = rows
            .into_iter()
            .map(|r| {
                r.iter()
                    .map(|x| x.parse::<T>().map_err(D::Error::custom))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Matrix::from_rows(parsed).map_err(D::Error::custom)
    }
}
