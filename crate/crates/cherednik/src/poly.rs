//! Sparse multivariate polynomials with exact coefficients, the carrier of
//! the polynomial representation `C[x_1..x_n]`.
//!
//! Terms are keyed by exponent vectors in a `BTreeMap`, so iteration order,
//! rendering and every derived basis are deterministic. The coefficient ring
//! is generic: [`Scalar`] for ordinary computations and
//! [`crate::param_poly::ParamPoly`] while residue coefficients are still
//! symbolic in the formal parameter.

use crate::param_poly::ParamPoly;
use crate::scalar::{parse_rational, parse_scalar, Scalar};
use crate::{Error, Result};
use num_traits::Signed;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// Exponent vector; the monomial `x_1^{e_1} ... x_n^{e_n}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

/// Coefficient ring interface for [`Poly`].
pub trait Coeff: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, s: &Scalar) -> Self;
}

impl Coeff for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, s: &Scalar) -> Self {
        self * s
    }
}

impl Coeff for ParamPoly {
    fn zero() -> Self {
        ParamPoly::zero()
    }
    fn one() -> Self {
        ParamPoly::one()
    }
    fn is_zero(&self) -> bool {
        ParamPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        ParamPoly::add(self, other)
    }
    fn neg(&self) -> Self {
        ParamPoly::neg(self)
    }
    fn mul(&self, other: &Self) -> Self {
        ParamPoly::mul(self, other)
    }
    fn scale(&self, s: &Scalar) -> Self {
        ParamPoly::scale(self, s)
    }
}

/// A sparse multivariate polynomial. Stored terms always have nonzero
/// coefficients and all operations require matching variable counts.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<C: Coeff = Scalar> {
    nvars: usize,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coeff> Poly<C> {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        let mut p = Poly::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// Total degree; zero polynomial reports `None`.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        assert_eq!(m.0.len(), self.nvars, "variable count mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = existing.add(&c);
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Poly<C>) -> Poly<C> {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly<C> {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Poly<C>) -> Poly<C> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly<C>) -> Poly<C> {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = Poly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.mul(cb));
            }
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Poly<C> {
        if s.is_zero() {
            return Poly::zero(self.nvars);
        }
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.scale(s));
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &C) -> Poly<C> {
        let mut out = Poly::zero(self.nvars);
        for (mm, cc) in &self.terms {
            out.add_term(mm.mul(m), cc.mul(c));
        }
        out
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn homogeneous_part(&self, d: u32) -> Poly<C> {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            if m.degree() == d {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }
}

impl Poly<Scalar> {
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut p = Poly::zero(nvars);
        p.add_term(Monomial::var(nvars, i), Scalar::one());
        p
    }

    pub fn monomial(nvars: usize, m: Monomial, c: Scalar) -> Self {
        let mut p = Poly::zero(nvars);
        p.add_term(m, c);
        p
    }

    /// A linear form `sum coeffs[i] x_i`.
    pub fn linear_form(coeffs: &[Scalar]) -> Self {
        let n = coeffs.len();
        let mut p = Poly::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(n, i), c.clone());
        }
        p
    }

    /// Exact evaluation at a point.
    pub fn evaluate(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.nvars, "dimension mismatch");
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    term = &term * &x.pow(e);
                }
            }
            acc = &acc + &term;
        }
        acc
    }

    pub fn derivative(&self, i: usize) -> Poly<Scalar> {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            if m.0[i] == 0 {
                continue;
            }
            let mut e = m.0.clone();
            e[i] -= 1;
            out.add_term(Monomial(e), c * &Scalar::from_int(i64::from(m.0[i])));
        }
        out
    }

    /// Exact division, erroring on a nonzero remainder. Division steps
    /// eliminate the lexicographically largest remaining term.
    pub fn exact_div(&self, divisor: &Poly<Scalar>) -> Result<Poly<Scalar>> {
        assert_eq!(self.nvars, divisor.nvars, "variable count mismatch");
        if divisor.is_zero() {
            return Err(Error::domain("division by the zero polynomial"));
        }
        let (lead_m, lead_c) = divisor.terms.iter().next_back().unwrap();
        let lead_inv = lead_c.inv()?;
        let mut rem = self.clone();
        let mut quo = Poly::zero(self.nvars);
        while let Some((m, c)) = rem.terms.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            if !lead_m.divides(&m) {
                return Err(Error::integrity(
                    "polynomial division left a nonzero remainder",
                ));
            }
            let qm = m.div(lead_m);
            let qc = &c * &lead_inv;
            rem = rem.sub(&divisor.mul_monomial(&qm, &qc));
            quo.add_term(qm, qc);
        }
        Ok(quo)
    }
}

/// All monomials of degree `d` in `n` variables, in descending lexicographic
/// order; the count is `C(d+n-1, n-1)`.
pub fn graded_basis(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if n == 1 {
            prefix.push(d);
            out.push(Monomial(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(n - 1, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d, &mut Vec::new(), &mut out);
    out
}

/// Monomial basis of one graded component with index lookup, the bridge
/// between polynomials and coefficient vectors.
#[derive(Clone, Debug)]
pub struct DegreeBasis {
    pub nvars: usize,
    pub degree: u32,
    pub monomials: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
}

impl DegreeBasis {
    pub fn new(nvars: usize, degree: u32) -> Self {
        let monomials = graded_basis(nvars, degree);
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        DegreeBasis {
            nvars,
            degree,
            monomials,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn index_of(&self, m: &Monomial) -> usize {
        self.index[m]
    }

    /// Coefficient vector of a homogeneous polynomial of this degree.
    pub fn to_vec(&self, f: &Poly<Scalar>) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.len()];
        for (m, c) in f.terms() {
            assert_eq!(m.degree(), self.degree, "not homogeneous of degree {}", self.degree);
            v[self.index[m]] = c.clone();
        }
        v
    }

    pub fn to_poly(&self, v: &[Scalar]) -> Poly<Scalar> {
        let mut p = Poly::zero(self.nvars);
        for (m, c) in self.monomials.iter().zip(v) {
            p.add_term(m.clone(), c.clone());
        }
        p
    }
}

// ---------------------------------------------------------------------------
// Rendering and parsing of the text format `3/2*x1^2*x2 + ...`.

impl fmt::Display for Poly<Scalar> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl Poly<Scalar> {
    fn render_term(m: &Monomial, c: &Scalar, lead: bool, out: &mut String) {
        use std::fmt::Write;
        let (sign, mag) = match c {
            Scalar::Rational(r) if r.is_negative() => ("-", Scalar::from_rat(-r)),
            _ => ("+", c.clone()),
        };
        if lead {
            if sign == "-" {
                out.push('-');
            }
        } else {
            out.push(' ');
            out.push_str(sign);
            out.push(' ');
        }
        let vars: Vec<String> = m
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("x{}", i + 1)
                } else {
                    format!("x{}^{}", i + 1, e)
                }
            })
            .collect();
        let coef_str = match &mag {
            Scalar::Cyclotomic(_) => format!("({mag})"),
            _ => format!("{mag}"),
        };
        if vars.is_empty() {
            write!(out, "{coef_str}").unwrap();
        } else if mag.is_one() {
            write!(out, "{}", vars.join("*")).unwrap();
        } else {
            write!(out, "{}*{}", coef_str, vars.join("*")).unwrap();
        }
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            Self::render_term(m, c, i == 0, &mut out);
        }
        out
    }

    /// Parse the text format, e.g. `3/2*x1^2*x2 - x3`. Cyclotomic
    /// coefficients are parenthesized: `(1 + e)*x1`. Floats are rejected.
    pub fn parse(s: &str, nvars: usize, l: u32) -> Result<Poly<Scalar>> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::domain("empty polynomial"));
        }
        let mut out = Poly::zero(nvars);
        let mut depth = 0usize;
        let mut term = String::new();
        let mut sign = 1i64;
        let flush = |term: &mut String, sign: i64, out: &mut Poly<Scalar>| -> Result<()> {
            if term.is_empty() {
                return Err(Error::domain("empty term in polynomial"));
            }
            let (m, c) = parse_poly_term(term, nvars, l)?;
            out.add_term(m, if sign < 0 { -&c } else { c });
            term.clear();
            Ok(())
        };
        for ch in s.chars() {
            match ch {
                '(' => {
                    depth += 1;
                    term.push(ch);
                }
                ')' => {
                    depth = depth
                        .checked_sub(1)
                        .ok_or_else(|| Error::domain("unbalanced parentheses"))?;
                    term.push(ch);
                }
                '+' | '-' if depth == 0 => {
                    if term.is_empty() {
                        // leading or repeated sign within one term
                        if ch == '-' {
                            sign = -sign;
                        }
                    } else {
                        flush(&mut term, sign, &mut out)?;
                        sign = if ch == '-' { -1 } else { 1 };
                    }
                }
                _ => term.push(ch),
            }
        }
        if depth != 0 {
            return Err(Error::domain("unbalanced parentheses"));
        }
        flush(&mut term, sign, &mut out)?;
        Ok(out)
    }
}

fn parse_poly_term(term: &str, nvars: usize, l: u32) -> Result<(Monomial, Scalar)> {
    let mut coeff = Scalar::one();
    let mut exps = vec![0u32; nvars];
    // split on '*' outside parentheses
    let mut factors = Vec::new();
    let mut cur = String::new();
    let mut depth = 0usize;
    for ch in term.chars() {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch);
            }
            ')' => {
                depth -= 1;
                cur.push(ch);
            }
            '*' if depth == 0 => {
                factors.push(std::mem::take(&mut cur));
            }
            _ => cur.push(ch),
        }
    }
    factors.push(cur);
    for f in factors {
        if let Some(rest) = f.strip_prefix('x') {
            let (var, exp) = match rest.split_once('^') {
                Some((v, e)) => (
                    v,
                    e.parse::<u32>()
                        .map_err(|_| Error::domain(format!("bad exponent in '{f}'")))?,
                ),
                None => (rest, 1),
            };
            let vi: usize = var
                .parse()
                .map_err(|_| Error::domain(format!("bad variable '{f}'")))?;
            if vi == 0 || vi > nvars {
                return Err(Error::domain(format!(
                    "variable x{vi} out of range 1..={nvars}"
                )));
            }
            exps[vi - 1] += exp;
        } else if let Some(inner) = f.strip_prefix('(').and_then(|g| g.strip_suffix(')')) {
            coeff = &coeff * &parse_scalar(inner, l)?;
        } else if f.contains('e') {
            coeff = &coeff * &parse_scalar(&f, l)?;
        } else {
            coeff = &coeff * &Scalar::from_rat(parse_rational(&f)?);
        }
    }
    Ok((Monomial(exps), coeff))
}

/// Serialized term for machine-readable output.
#[derive(Serialize)]
pub struct TermJson {
    pub exponents: Vec<u32>,
    pub coefficient: String,
}

impl Serialize for Poly<Scalar> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermJson> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| TermJson {
                exponents: m.0.clone(),
                coefficient: c.to_string(),
            })
            .collect();
        terms.serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn xp(nvars: usize, i: usize) -> Poly<Scalar> {
        Poly::var(nvars, i)
    }

    #[test]
    fn product_of_sum_and_difference() {
        let x1 = xp(2, 0);
        let x2 = xp(2, 1);
        let prod = x1.add(&x2).mul(&x1.sub(&x2));
        let expect = x1.mul(&x1).sub(&x2.mul(&x2));
        assert_eq!(prod, expect);
    }

    #[test]
    fn adding_zero_is_identity() {
        let f = xp(3, 0).mul(&xp(3, 1));
        assert_eq!(f.add(&Poly::zero(3)), f);
    }

    #[test]
    fn binomial_square() {
        let x1 = xp(2, 0);
        let x2 = xp(2, 1);
        let sq = x1.add(&x2).mul(&x1.add(&x2));
        assert_eq!(sq.coeff(&Monomial(vec![1, 1])), Scalar::from_int(2));
        assert_eq!(sq.coeff(&Monomial(vec![2, 0])), Scalar::one());
        assert_eq!(sq.num_terms(), 3);
    }

    #[test]
    fn graded_basis_ordering_and_counts() {
        let b = graded_basis(2, 2);
        assert_eq!(
            b,
            vec![
                Monomial(vec![2, 0]),
                Monomial(vec![1, 1]),
                Monomial(vec![0, 2])
            ]
        );
        assert_eq!(graded_basis(1, 5), vec![Monomial(vec![5])]);
        assert_eq!(graded_basis(3, 2).len(), 6);
        // sizes match the coefficients of 1/(1-t)^n
        for n in 1..=4usize {
            for d in 0..=6u32 {
                let expect = binomial(d as usize + n - 1, n - 1);
                assert_eq!(graded_basis(n, d).len(), expect, "n={n} d={d}");
            }
        }
    }

    fn binomial(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        let mut acc = 1usize;
        for i in 0..k {
            acc = acc * (n - i) / (i + 1);
        }
        acc
    }

    #[test]
    fn evaluation_is_exact() {
        let f = xp(2, 0).sub(&xp(2, 1));
        assert!(f
            .evaluate(&[Scalar::one(), Scalar::one()])
            .is_zero());
        let g = xp(2, 0).mul(&xp(2, 1));
        assert_eq!(
            g.evaluate(&[Scalar::from_int(2), Scalar::from_int(3)]),
            Scalar::from_int(6)
        );
    }

    #[test]
    fn exact_division_and_remainder_detection() {
        let x1 = xp(2, 0);
        let x2 = xp(2, 1);
        let diff = x1.sub(&x2);
        let prod = diff.mul(&diff);
        assert_eq!(prod.exact_div(&diff).unwrap(), diff);
        match x1.add(&x2).exact_div(&diff) {
            Err(crate::Error::Integrity(_)) => {}
            other => panic!("expected integrity error, got {other:?}"),
        }
    }

    #[test]
    fn render_and_parse_round_trip() {
        let f = Poly::parse("3/2*x1^2*x2 - x3 + 2", 3, 1).unwrap();
        assert_eq!(f.coeff(&Monomial(vec![2, 1, 0])), Scalar::from_rat(rat(3, 2)));
        assert_eq!(f.coeff(&Monomial(vec![0, 0, 1])), Scalar::from_int(-1));
        assert_eq!(f.render(), "3/2*x1^2*x2 - x3 + 2");
        let g = Poly::parse(&f.render(), 3, 1).unwrap();
        assert_eq!(f, g);
        let h = Poly::parse("(1 + e)*x1 - e^2*x2", 2, 3).unwrap();
        let e = Scalar::root_of_unity(3, 1);
        assert_eq!(h.coeff(&Monomial(vec![1, 0])), &Scalar::one() + &e);
        assert_eq!(h.coeff(&Monomial(vec![0, 1])), -&e.pow(2));
        assert!(Poly::parse("0.5*x1", 2, 1).is_err());
    }
}
