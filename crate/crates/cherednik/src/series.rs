//! Truncated power series in `t` with exact coefficients, plus the small
//! polynomial-in-`t` helpers used by closed-form characters.

use crate::scalar::Scalar;
use crate::{Error, Result};

/// Coefficients of `t^0 .. t^N`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries {
    pub coeffs: Vec<Scalar>,
}

impl TruncSeries {
    pub fn zero(upto: usize) -> Self {
        TruncSeries {
            coeffs: vec![Scalar::zero(); upto + 1],
        }
    }

    pub fn one(upto: usize) -> Self {
        let mut s = TruncSeries::zero(upto);
        s.coeffs[0] = Scalar::one();
        s
    }

    pub fn from_poly(poly: &[Scalar], upto: usize) -> Self {
        let mut s = TruncSeries::zero(upto);
        for (i, c) in poly.iter().take(upto + 1).enumerate() {
            s.coeffs[i] = c.clone();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn add(&self, other: &TruncSeries) -> TruncSeries {
        let upto = self.order().min(other.order());
        let mut out = TruncSeries::zero(upto);
        for i in 0..=upto {
            out.coeffs[i] = &self.coeffs[i] + &other.coeffs[i];
        }
        out
    }

    pub fn sub(&self, other: &TruncSeries) -> TruncSeries {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> TruncSeries {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> TruncSeries {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn mul(&self, other: &TruncSeries) -> TruncSeries {
        let upto = self.order().min(other.order());
        let mut out = TruncSeries::zero(upto);
        for (i, a) in self.coeffs.iter().enumerate().take(upto + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(upto + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] = &out.coeffs[i + j] + &(a * b);
                }
            }
        }
        out
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inverse(&self) -> Result<TruncSeries> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::domain("series with zero constant term"));
        }
        let inv0 = a0.inv()?;
        let mut out = TruncSeries::zero(self.order());
        out.coeffs[0] = inv0.clone();
        for m in 1..=self.order() {
            let mut acc = Scalar::zero();
            for j in 1..=m {
                if !self.coeffs[j].is_zero() {
                    acc = &acc + &(&self.coeffs[j] * &out.coeffs[m - j]);
                }
            }
            out.coeffs[m] = -&(&acc * &inv0);
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }
}

// ---------------------------------------------------------------------------
// Dense polynomials in t, little endian, used for determinant factors.

pub fn tpoly_mul(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Scalar::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] = &out[i + j] + &(x * y);
            }
        }
    }
    out
}

pub fn tpoly_add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Scalar::zero);
            let y = b.get(i).cloned().unwrap_or_else(Scalar::zero);
            &x + &y
        })
        .collect()
}

pub fn tpoly_neg(a: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(|c| -c).collect()
}

/// Exact division of `t`-polynomials; errors on a nonzero remainder.
pub fn tpoly_div_exact(num: &[Scalar], den: &[Scalar]) -> Result<Vec<Scalar>> {
    let mut rem: Vec<Scalar> = num.to_vec();
    trim(&mut rem);
    let mut den = den.to_vec();
    trim(&mut den);
    if den.is_empty() {
        return Err(Error::domain("division by zero polynomial"));
    }
    let dd = den.len() - 1;
    let lead_inv = den[dd].inv()?;
    let mut quo = vec![Scalar::zero(); rem.len().saturating_sub(dd)];
    while rem.len() > dd {
        let shift = rem.len() - 1 - dd;
        let f = &rem[rem.len() - 1] * &lead_inv;
        for (i, c) in den.iter().enumerate() {
            rem[shift + i] = &rem[shift + i] - &(&f * c);
        }
        quo[shift] = f;
        trim(&mut rem);
    }
    if !rem.is_empty() {
        return Err(Error::integrity("t-polynomial division left a remainder"));
    }
    Ok(quo)
}

fn trim(p: &mut Vec<Scalar>) {
    while p.last().is_some_and(Scalar::is_zero) {
        p.pop();
    }
}

/// Determinant of `I - M t^r` as a polynomial in `t`, by cofactor expansion
/// over the entries, which are themselves `t`-polynomials.
pub fn det_one_minus_m_tr(m: &[Vec<Scalar>], r: u32) -> Vec<Scalar> {
    let n = m.len();
    let mut entries: Vec<Vec<Vec<Scalar>>> = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut p = vec![Scalar::zero(); r as usize + 1];
            p[r as usize] = -&m[i][j];
            if i == j {
                p[0] = &p[0] + &Scalar::one();
            }
            entries[i][j] = p;
        }
    }
    tpoly_det(&entries)
}

fn tpoly_det(m: &[Vec<Vec<Scalar>>]) -> Vec<Scalar> {
    let n = m.len();
    if n == 0 {
        return vec![Scalar::one()];
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc: Vec<Scalar> = Vec::new();
    for j in 0..n {
        if m[0][j].iter().all(Scalar::is_zero) {
            continue;
        }
        let minor: Vec<Vec<Vec<Scalar>>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let mut term = tpoly_mul(&m[0][j], &tpoly_det(&minor));
        if j % 2 == 1 {
            term = tpoly_neg(&term);
        }
        acc = tpoly_add(&acc, &term);
    }
    acc
}
