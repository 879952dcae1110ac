//! Factored spectrum descriptions.
//!
//! Exact spectra are reported as a product of monic integer polynomial
//! factors with multiplicities; conjugate irrational or complex eigenvalue
//! pairs stay bundled inside their integer quadratic factors, so nothing is
//! ever approximated. A form for a graph with m edges must expand to a
//! monic polynomial of degree 2m.

use thiserror::Error;

use crate::poly::Poly;
use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectrumError {
    #[error("factor {0} is not monic")]
    NonMonicFactor(String),
    #[error("factor multiplicities must be at least 1")]
    ZeroMultiplicity,
}

/// A spectrum as a list of (monic factor, multiplicity) pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumForm<T> {
    factors: Vec<(Poly<T>, usize)>,
}

impl<T: Scalar> SpectrumForm<T> {
    pub fn new(factors: Vec<(Poly<T>, usize)>) -> Result<Self, SpectrumError> {
        for (f, mult) in &factors {
            if !f.is_monic() {
                return Err(SpectrumError::NonMonicFactor(f.to_string()));
            }
            if *mult == 0 {
                return Err(SpectrumError::ZeroMultiplicity);
            }
        }
        Ok(SpectrumForm { factors })
    }

    /// Spectrum of a diagonalizable-by-construction list of integer
    /// eigenvalues: pairs of (eigenvalue, multiplicity).
    pub fn from_integer_eigenvalues(eigs: Vec<(T, usize)>) -> Result<Self, SpectrumError> {
        SpectrumForm::new(
            eigs.into_iter()
                .map(|(root, mult)| (Poly::linear_from_root(root), mult))
                .collect(),
        )
    }

    pub fn factors(&self) -> &[(Poly<T>, usize)] {
        &self.factors
    }

    /// Sum of multiplicity times degree over all factors.
    pub fn total_degree(&self) -> usize {
        self.factors
            .iter()
            .map(|(f, mult)| f.degree().unwrap_or(0) * mult)
            .sum()
    }

    /// Multiply the form out into a single monic polynomial.
    pub fn expand(&self) -> Poly<T> {
        self.factors
            .iter()
            .fold(Poly::one(), |acc, (f, mult)| acc.mul(&f.pow(*mult)))
    }
}

/// Integer root table of a nonzero polynomial, scanning `|root| <= bound`:
/// `Some` with (root, multiplicity) pairs sorted by root exactly when the
/// polynomial splits completely over those integers, else `None`.
pub fn integer_root_table<T: Scalar>(p: &Poly<T>, bound: &T) -> Option<Vec<(T, usize)>> {
    let degree = p.degree()?;
    let mut table = Vec::new();
    let mut found = 0usize;
    let mut candidate = -bound.clone();
    while candidate <= *bound && found < degree {
        let mult = p
            .root_multiplicity(&candidate)
            .expect("nonzero polynomial");
        if mult > 0 {
            found += mult;
            table.push((candidate.clone(), mult));
        }
        candidate = candidate + T::one();
    }
    (found == degree).then_some(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = Poly<i64>;

    fn p(coeffs: &[i64]) -> P {
        Poly::new(coeffs.to_vec())
    }

    #[test]
    fn expansion_and_degree() {
        // x^2 (x - 1)^8
        let form = SpectrumForm::from_integer_eigenvalues(vec![(0, 2), (1, 8)]).unwrap();
        assert_eq!(form.total_degree(), 10);
        let expanded = form.expand();
        assert!(expanded.is_monic());
        assert_eq!(expanded, p(&[0, 0, 1]).mul(&p(&[-1, 1]).pow(8)));
    }

    #[test]
    fn validation() {
        assert!(matches!(
            SpectrumForm::new(vec![(p(&[0, 2]), 1)]),
            Err(SpectrumError::NonMonicFactor(_))
        ));
        assert!(matches!(
            SpectrumForm::new(vec![(P::x(), 0)]),
            Err(SpectrumError::ZeroMultiplicity)
        ));
        let quadratic = SpectrumForm::new(vec![(p(&[3, -3, 1]), 2), (P::x(), 2)]).unwrap();
        assert_eq!(quadratic.total_degree(), 6);
    }

    #[test]
    fn root_table_detects_full_integer_splits() {
        let phi = p(&[0, 0, 1]).mul(&p(&[-1, 1]).pow(8));
        assert_eq!(
            integer_root_table(&phi, &10),
            Some(vec![(0, 2), (1, 8)])
        );
        // x^2 - 3x + 3 has no integer roots
        let mixed = p(&[0, 0, 1]).mul(&p(&[3, -3, 1]).pow(2));
        assert_eq!(integer_root_table(&mixed, &100), None);
        // bound too small to reach the root
        assert_eq!(integer_root_table(&p(&[-5, 1]), &3), None);
        assert_eq!(integer_root_table(&p(&[-5, 1]), &5), Some(vec![(5, 1)]));
        // constant 1 splits vacuously
        assert_eq!(integer_root_table(&P::one(), &3), Some(vec![]));
    }
}
