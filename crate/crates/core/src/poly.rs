//! Dense univariate polynomials with exact integer coefficients.
//!
//! Coefficients are stored ascending by degree; the zero polynomial is the
//! empty list and a nonzero polynomial never has a zero leading coefficient.
//! All operations are exact ring operations. Division is only provided for
//! monic divisors (every divisor in this crate is a characteristic
//! polynomial), which keeps quotient and remainder integral.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("divisor is not monic (leading coefficient {0})")]
    NonMonicDivisor(String),
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
}

/// Polynomial over an exact integer scalar, coefficients ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    /// Build from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `c * x^degree`.
    pub fn monomial(c: T, degree: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); degree + 1];
        coeffs[degree] = c;
        Poly { coeffs }
    }

    pub fn x() -> Self {
        Poly::monomial(T::one(), 1)
    }

    /// The monic linear factor `x - root`.
    pub fn linear_from_root(root: T) -> Self {
        Poly::new(vec![-root, T::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, at: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + other.coeff(k));
        }
        Poly::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - other.coeff(k));
        }
        Poly::new(out)
    }

    /// Exact schoolbook product.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = std::mem::replace(&mut out[i + j], T::zero()) + a.clone() * b;
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, factor: &T) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.clone() * factor).collect())
    }

    /// Exact power by repeated squaring; `p^0 = 1`.
    pub fn pow(&self, exp: usize) -> Self {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Exact euclidean division by a monic divisor:
    /// `self = divisor * quotient + remainder` with
    /// `deg(remainder) < deg(divisor)`.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self), PolyError> {
        if divisor.is_zero() {
            return Err(PolyError::ZeroDivisor);
        }
        if !divisor.is_monic() {
            return Err(PolyError::NonMonicDivisor(
                divisor.leading().expect("nonzero").to_string(),
            ));
        }
        let d = divisor.degree().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![T::zero(); rem.len() - d];
        for shift in (0..quot.len()).rev() {
            let lead = rem[shift + d].clone();
            if lead.is_zero() {
                continue;
            }
            for (k, qc) in divisor.coeffs.iter().enumerate() {
                rem[shift + k] =
                    std::mem::replace(&mut rem[shift + k], T::zero()) - lead.clone() * qc;
            }
            quot[shift] = lead;
        }
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Largest `k` such that `(x - root)^k` divides the polynomial.
    pub fn root_multiplicity(&self, root: &T) -> Result<usize, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut current = self.clone();
        let mut count = 0;
        while !current.coeffs.is_empty() && current.eval(root).is_zero() {
            current = current.deflate(root);
            count += 1;
        }
        Ok(count)
    }

    // Synthetic division by (x - root); caller guarantees root is a root.
    fn deflate(&self, root: &T) -> Self {
        let n = self.coeffs.len();
        debug_assert!(n >= 1);
        let mut out = vec![T::zero(); n - 1];
        let mut carry = T::zero();
        for k in (1..n).rev() {
            carry = carry * root + &self.coeffs[k];
            out[k - 1] = carry.clone();
        }
        debug_assert!((carry * root + &self.coeffs[0]).is_zero());
        Poly::new(out)
    }

    /// Product of an iterator of polynomials; empty product is 1.
    pub fn product<'a>(factors: impl IntoIterator<Item = &'a Self>) -> Self
    where
        T: 'a,
    {
        factors
            .into_iter()
            .fold(Poly::one(), |acc, f| acc.mul(f))
    }
}

impl<T: Scalar> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

// JSON schema: {"coeffs": ["c0", "c1", ...]} with decimal strings ascending
// by degree, so arbitrary-precision coefficients survive any JSON reader.
impl<T: Scalar> Serialize for Poly<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let coeffs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        let mut s = serializer.serialize_struct("Poly", 1)?;
        s.serialize_field("coeffs", &coeffs)?;
        s.end()
    }
}

impl<'de, T> Deserialize<'de> for Poly<T>
where
    T: Scalar + FromStr,
    <T as FromStr>::Err: fmt::Display,
{
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            coeffs: Vec<String>,
        }
        let repr = Repr::deserialize(deserializer)?;
        let coeffs = repr
            .coeffs
            .iter()
            .map(|c| c.parse::<T>().map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Poly::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = Poly<i64>;

    fn p(coeffs: &[i64]) -> P {
        Poly::new(coeffs.to_vec())
    }

    #[test]
    fn zero_polynomial_is_empty() {
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0, 0]).degree(), None);
        assert_eq!(p(&[5, 0, 0]).degree(), Some(0));
    }

    #[test]
    fn mul_matches_hand_expansion() {
        // x * (x - 3) = x^2 - 3x
        assert_eq!(P::x().mul(&p(&[-3, 1])), p(&[0, -3, 1]));
        // (x^2 - 3x + 3)^2 = x^4 - 6x^3 + 15x^2 - 18x + 9
        assert_eq!(p(&[3, -3, 1]).pow(2), p(&[9, -18, 15, -6, 1]));
    }

    #[test]
    fn eval_horner() {
        assert_eq!(p(&[3, -3, 1]).eval(&1), 1);
        assert_eq!(p(&[3, -3, 1]).eval(&0), 3);
        assert_eq!(P::zero().eval(&42), 0);
    }

    #[test]
    fn divrem_examples() {
        // x^2 / x = (x, 0)
        let (q, r) = p(&[0, 0, 1]).divrem(&P::x()).unwrap();
        assert_eq!((q, r), (P::x(), P::zero()));
        // (x^2 + 1) / x = (x, 1)
        let (q, r) = p(&[1, 0, 1]).divrem(&P::x()).unwrap();
        assert_eq!((q, r), (P::x(), P::one()));
        // short dividend
        let (q, r) = p(&[7]).divrem(&P::x()).unwrap();
        assert_eq!((q, r), (P::zero(), p(&[7])));
    }

    #[test]
    fn divrem_rejects_bad_divisors() {
        assert_eq!(p(&[1]).divrem(&P::zero()), Err(PolyError::ZeroDivisor));
        assert_eq!(
            p(&[1]).divrem(&p(&[0, 2])),
            Err(PolyError::NonMonicDivisor("2".into()))
        );
    }

    #[test]
    fn root_multiplicity_examples() {
        // x^2 (x^2 - 3x + 3)^2 at 0 -> 2
        let phi = p(&[0, 0, 1]).mul(&p(&[3, -3, 1]).pow(2));
        assert_eq!(phi.root_multiplicity(&0).unwrap(), 2);
        assert_eq!(phi.root_multiplicity(&1).unwrap(), 0);
        // x^2 at 1 -> 0
        assert_eq!(p(&[0, 0, 1]).root_multiplicity(&1).unwrap(), 0);
        assert_eq!(P::zero().root_multiplicity(&0), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn display_renders_signs_and_powers() {
        assert_eq!(p(&[3, -3, 1]).to_string(), "x^2 - 3x + 3");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
        assert_eq!(P::zero().to_string(), "0");
        assert_eq!(p(&[-2, 0, 0, 1]).to_string(), "x^3 - 2");
    }

    #[test]
    fn json_round_trip() {
        let phi = p(&[9, -18, 15, -6, 1]);
        let json = serde_json::to_string(&phi).unwrap();
        assert_eq!(json, r#"{"coeffs":["9","-18","15","-6","1"]}"#);
        let back: P = serde_json::from_str(&json).unwrap();
        assert_eq!(back, phi);
    }
}
