//! Division-free characteristic polynomials (Samuelson-Berkowitz).
//!
//! `charpoly` returns det(xI - A) as a monic integer polynomial without a
//! single division, so it works verbatim over any exact integer scalar.
//! The recursion grows the leading principal submatrix one row at a time;
//! step k multiplies the current coefficient vector by a lower-triangular
//! Toeplitz matrix whose taps are 1, -a_kk, and the path sums
//! -(R * B^t * C) of the bordering row R and column C over the previous
//! block B. Cost is O(n^4) ring operations, and the zero-skipping
//! matrix-vector kernel makes the sparse edge matrices far cheaper.

use crate::matrix::{Matrix, MatrixError};
use crate::poly::Poly;
use crate::scalar::Scalar;

/// Monic characteristic polynomial det(xI - A); the 0x0 matrix yields 1.
pub fn charpoly<T: Scalar>(a: &Matrix<T>) -> Result<Poly<T>, MatrixError> {
    if !a.is_square() {
        return Err(MatrixError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    // coefficients by descending power, starting from the empty matrix
    let mut coeffs: Vec<T> = vec![T::one()];
    for k in 1..=n {
        let new = k - 1;
        // taps[0] = 1, taps[1] = -a_kk, taps[2 + t] = -(R * B^t * C)
        let mut taps: Vec<T> = Vec::with_capacity(k + 1);
        taps.push(T::one());
        taps.push(-a.get(new, new).clone());
        if k >= 2 {
            let mut w: Vec<T> = (0..new).map(|i| a.get(i, new).clone()).collect();
            for t in 0..new {
                let mut s = T::zero();
                for (j, x) in w.iter().enumerate() {
                    let r = a.get(new, j);
                    if r.is_zero() || x.is_zero() {
                        continue;
                    }
                    s = s + r.clone() * x;
                }
                taps.push(-s);
                if t + 1 < new {
                    w = mul_block_vec(a, new, &w);
                }
            }
        }
        let mut next = vec![T::zero(); k + 1];
        for (i, slot) in next.iter_mut().enumerate() {
            let mut acc = T::zero();
            let j_lo = i.saturating_sub(taps.len() - 1);
            for (j, c) in coeffs.iter().enumerate().take(i + 1).skip(j_lo) {
                let tap = &taps[i - j];
                if tap.is_zero() || c.is_zero() {
                    continue;
                }
                acc = acc + tap.clone() * c;
            }
            *slot = acc;
        }
        coeffs = next;
    }
    coeffs.reverse();
    Ok(Poly::new(coeffs))
}

// w <- B * w where B is the leading `size` x `size` block of `a`.
fn mul_block_vec<T: Scalar>(a: &Matrix<T>, size: usize, w: &[T]) -> Vec<T> {
    (0..size)
        .map(|i| {
            let mut acc = T::zero();
            for (j, x) in w.iter().enumerate() {
                let b = a.get(i, j);
                if b.is_zero() || x.is_zero() {
                    continue;
                }
                acc = acc + b.clone() * x;
            }
            acc
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn m(rows: &[&[i64]]) -> Matrix<i64> {
        Matrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn p(coeffs: &[i64]) -> Poly<i64> {
        Poly::new(coeffs.to_vec())
    }

    #[test]
    fn trivial_orders() {
        assert_eq!(charpoly(&Matrix::<i64>::zero(0, 0)).unwrap(), Poly::one());
        assert_eq!(charpoly(&m(&[&[5]])).unwrap(), p(&[-5, 1]));
        // x^2 for the 2x2 zero matrix
        assert_eq!(charpoly(&Matrix::<i64>::zero(2, 2)).unwrap(), p(&[0, 0, 1]));
    }

    #[test]
    fn two_by_two_trace_det() {
        // x^2 - (a + d) x + (ad - bc)
        assert_eq!(charpoly(&m(&[&[1, 2], &[3, 4]])).unwrap(), p(&[-2, -5, 1]));
    }

    #[test]
    fn diagonal_matrix() {
        // diag(1, 0, 0, 1) -> x^2 (x - 1)^2 = x^4 - 2x^3 + x^2
        let d = Matrix::diagonal(vec![1i64, 0, 0, 1]);
        assert_eq!(charpoly(&d).unwrap(), p(&[0, 0, 1, -2, 1]));
    }

    #[test]
    fn companion_of_cubic() {
        // companion matrix of x^3 - 2x - 5
        let c = m(&[&[0, 0, 5], &[1, 0, 2], &[0, 1, 0]]);
        assert_eq!(charpoly(&c).unwrap(), p(&[-5, -2, 0, 1]));
    }

    #[test]
    fn rejects_non_square() {
        assert!(matches!(
            charpoly(&Matrix::<i64>::zero(2, 3)),
            Err(MatrixError::NotSquare { .. })
        ));
    }

    #[test]
    fn bigint_and_i64_agree() {
        let small = m(&[&[2, -1, 0], &[3, 0, 4], &[-2, 5, 1]]);
        let big = Matrix::from_fn(3, 3, |i, j| BigInt::from(*small.get(i, j)));
        let ps = charpoly(&small).unwrap();
        let pb = charpoly(&big).unwrap();
        let lifted: Vec<BigInt> = ps.coeffs().iter().map(|c| BigInt::from(*c)).collect();
        assert_eq!(pb.coeffs(), &lifted[..]);
    }
}
