//! Univariate polynomials in a formal parameter `κ`, used to carry residue
//! coefficients symbolically before they are divided by the normalization
//! product `(κ-1)...(κ-s)` and specialized at a numeric parameter value.

use crate::scalar::Scalar;
use crate::{Error, Result};

/// Little-endian coefficients over [`Scalar`]; the leading coefficient of a
/// nonzero polynomial is nonzero.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamPoly {
    coeffs: Vec<Scalar>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        ParamPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        ParamPoly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        let mut p = ParamPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    /// The formal variable `κ`.
    pub fn kappa() -> Self {
        ParamPoly {
            coeffs: vec![Scalar::zero(), Scalar::one()],
        }
    }

    pub fn from_coeffs(coeffs: Vec<Scalar>) -> Self {
        let mut p = ParamPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Scalar::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of a nonzero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn add(&self, other: &ParamPoly) -> ParamPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(Scalar::zero);
            let b = other.coeffs.get(i).cloned().unwrap_or_else(Scalar::zero);
            out.push(&a + &b);
        }
        ParamPoly::from_coeffs(out)
    }

    pub fn neg(&self) -> ParamPoly {
        ParamPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &ParamPoly) -> ParamPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &ParamPoly) -> ParamPoly {
        if self.is_zero() || other.is_zero() {
            return ParamPoly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        ParamPoly::from_coeffs(out)
    }

    pub fn scale(&self, s: &Scalar) -> ParamPoly {
        ParamPoly::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Evaluate at a numeric parameter value.
    pub fn eval(&self, at: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * at) + c;
        }
        acc
    }

    /// Exact division. A nonzero remainder means the caller assembled a wrong
    /// residue expansion, so it is reported as an integrity error.
    pub fn div_exact(&self, q: &ParamPoly) -> Result<ParamPoly> {
        if q.is_zero() {
            return Err(Error::domain("division by the zero polynomial"));
        }
        let mut rem = self.clone();
        let dd = q.coeffs.len() - 1;
        let lead_inv = q.coeffs[dd].inv()?;
        let mut quo = vec![Scalar::zero(); rem.coeffs.len().saturating_sub(dd)];
        while rem.coeffs.len() > dd {
            let shift = rem.coeffs.len() - 1 - dd;
            let factor = &rem.coeffs[rem.coeffs.len() - 1] * &lead_inv;
            for (i, c) in q.coeffs.iter().enumerate() {
                rem.coeffs[shift + i] = &rem.coeffs[shift + i] - &(&factor * c);
            }
            quo[shift] = factor;
            rem.trim();
        }
        if !rem.is_zero() {
            return Err(Error::integrity(
                "formal parameter division left a nonzero remainder",
            ));
        }
        Ok(ParamPoly::from_coeffs(quo))
    }

    /// The normalization product `(κ-1)(κ-2)...(κ-s)`; the empty product is 1.
    pub fn falling_product(s: u32) -> ParamPoly {
        let mut acc = ParamPoly::one();
        for i in 1..=s {
            let factor = ParamPoly::from_coeffs(vec![Scalar::from_int(-(i as i64)), Scalar::one()]);
            acc = acc.mul(&factor);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kp(coeffs: &[i64]) -> ParamPoly {
        ParamPoly::from_coeffs(coeffs.iter().map(|&c| Scalar::from_int(c)).collect())
    }

    #[test]
    fn factors_divide_exactly() {
        // κ^2 - 3κ + 2 = (κ-1)(κ-2)
        let p = kp(&[2, -3, 1]);
        let q = kp(&[-1, 1]);
        assert_eq!(p.div_exact(&q).unwrap(), kp(&[-2, 1]));
    }

    #[test]
    fn zero_divided_by_anything_is_zero() {
        assert_eq!(ParamPoly::zero().div_exact(&kp(&[-1, 1])).unwrap(), ParamPoly::zero());
    }

    #[test]
    fn empty_normalization_product_is_one() {
        assert_eq!(ParamPoly::falling_product(0), ParamPoly::one());
        let p = kp(&[7, 3]);
        assert_eq!(p.div_exact(&ParamPoly::falling_product(0)).unwrap(), p);
    }

    #[test]
    fn inexact_division_is_an_integrity_error() {
        let p = kp(&[1, 1]);
        let q = kp(&[-1, 1]);
        match p.div_exact(&q) {
            Err(crate::Error::Integrity(_)) => {}
            other => panic!("expected integrity error, got {other:?}"),
        }
    }

    #[test]
    fn evaluation_specializes_the_parameter() {
        let p = kp(&[2, -3, 1]);
        assert_eq!(p.eval(&Scalar::from_int(1)), Scalar::zero());
        assert_eq!(p.eval(&Scalar::from_int(3)), Scalar::from_int(2));
    }
}
