//! Exact scalars: arbitrary-precision rationals and cyclotomic fields `Q(e_l)`.
//!
//! A cyclotomic element is a residue modulo the l-th cyclotomic polynomial
//! `Phi_l`, so the carrier is a field and kernel computations downstream are
//! valid. Values are normalized on construction: an element of `Q(e_l)` whose
//! coefficients above degree zero vanish is demoted to a plain rational, and
//! orders 1 and 2 never build an extension at all (`e_1 = 1`, `e_2 = -1`).

use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

pub type Rat = BigRational;

/// `n` as an exact rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n/d` as an exact rational.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// An exact field element: either a rational or an element of `Q(e_l)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scalar {
    Rational(Rat),
    Cyclotomic(Cyc),
}

/// A nonrational element of `Q(e_l)`: coefficients of `1, e, ..., e^(phi(l)-1)`
/// modulo `Phi_l`. Invariant: `order >= 3` and some coefficient above index 0
/// is nonzero (otherwise the value is stored as `Scalar::Rational`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cyc {
    order: u32,
    coeffs: Vec<Rat>,
}

impl Cyc {
    pub fn order(&self) -> u32 {
        self.order
    }
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }
}

/// Euler totient, the degree of `Phi_l`.
pub fn phi(l: u32) -> usize {
    (1..=l).filter(|j| gcd_u32(*j, l) == 1).count()
}

fn gcd_u32(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd_u32(b, a % b)
    }
}

// ---------------------------------------------------------------------------
// Dense univariate polynomials over Q, used only for the modular arithmetic
// behind Q(e_l). Coefficient vectors are little endian and trimmed.

fn rpoly_trim(p: &mut Vec<Rat>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn rpoly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    rpoly_trim(&mut out);
    out
}

/// Division with remainder in Q[z]. The divisor must be nonzero.
fn rpoly_divmod(num: &[Rat], den: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let mut rem: Vec<Rat> = num.to_vec();
    rpoly_trim(&mut rem);
    let dd = den.len() - 1;
    let lead = &den[dd];
    let mut quo = vec![Rat::zero(); rem.len().saturating_sub(dd)];
    while rem.len() > dd {
        let shift = rem.len() - 1 - dd;
        let factor = rem.last().unwrap() / lead;
        for (i, c) in den.iter().enumerate() {
            let v = &factor * c;
            rem[shift + i] -= v;
        }
        quo[shift] = factor;
        rpoly_trim(&mut rem);
    }
    rpoly_trim(&mut quo);
    (quo, rem)
}

/// Bezout coefficient `u` with `u*a = gcd(a, b) (mod b)`, gcd normalized to 1.
/// Requires `gcd(a, b)` to be a nonzero constant, which holds for `a` nonzero
/// of degree below the irreducible `b`.
fn rpoly_inverse_mod(a: &[Rat], modulus: &[Rat]) -> Vec<Rat> {
    let mut r0: Vec<Rat> = modulus.to_vec();
    let mut r1: Vec<Rat> = a.to_vec();
    let mut s0: Vec<Rat> = Vec::new();
    let mut s1: Vec<Rat> = vec![Rat::one()];
    while !r1.is_empty() {
        let (q, r2) = rpoly_divmod(&r0, &r1);
        let qs1 = rpoly_mul(&q, &s1);
        let mut s2 = s0.clone();
        s2.resize(s2.len().max(qs1.len()), Rat::zero());
        for (i, c) in qs1.iter().enumerate() {
            s2[i] -= c;
        }
        rpoly_trim(&mut s2);
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    assert_eq!(r0.len(), 1, "modulus not coprime to operand");
    let g = r0[0].clone();
    s0.iter().map(|c| c / &g).collect()
}

// ---------------------------------------------------------------------------
// Per-order tables: Phi_l and reductions of powers of e.

struct FieldTable {
    phi: usize,
    /// `e^t` reduced modulo `Phi_l`, for `t = 0 .. max(l, 2*phi) - 1`.
    pow_red: Vec<Vec<Rat>>,
    /// `Phi_l`, monic with integer coefficients.
    minimal: Vec<Rat>,
}

fn tables() -> &'static Mutex<HashMap<u32, Arc<FieldTable>>> {
    static TABLES: OnceLock<Mutex<HashMap<u32, Arc<FieldTable>>>> = OnceLock::new();
    TABLES.get_or_init(|| Mutex::new(HashMap::new()))
}

fn field_table(l: u32) -> Arc<FieldTable> {
    let mut map = tables().lock().unwrap();
    if let Some(t) = map.get(&l) {
        return Arc::clone(t);
    }
    let minimal = cyclotomic_polynomial(l);
    let deg = minimal.len() - 1;
    let limit = (l as usize).max(2 * deg);
    let mut pow_red: Vec<Vec<Rat>> = Vec::with_capacity(limit);
    let mut cur = vec![Rat::one()];
    for _ in 0..limit {
        pow_red.push(cur.clone());
        // multiply by e and reduce
        cur.insert(0, Rat::zero());
        if cur.len() > deg {
            let lead = cur.pop().unwrap();
            for (i, c) in minimal.iter().take(deg).enumerate() {
                let v = &lead * c;
                cur[i] -= v;
            }
            rpoly_trim(&mut cur);
        }
    }
    let table = Arc::new(FieldTable {
        phi: deg,
        pow_red,
        minimal,
    });
    map.insert(l, Arc::clone(&table));
    table
}

/// The l-th cyclotomic polynomial, computed by exact division of `z^l - 1`
/// by the `Phi_d` for proper divisors `d`.
pub fn cyclotomic_polynomial(l: u32) -> Vec<Rat> {
    let mut num = vec![Rat::zero(); l as usize + 1];
    num[0] = -Rat::one();
    num[l as usize] = Rat::one();
    for d in 1..l {
        if l.is_multiple_of(d) {
            let phi_d = cyclotomic_polynomial(d);
            let (q, r) = rpoly_divmod(&num, &phi_d);
            assert!(r.is_empty(), "cyclotomic polynomial division not exact");
            num = q;
        }
    }
    num
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rational(Rat::zero())
    }

    pub fn one() -> Self {
        Scalar::Rational(Rat::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Rational(rat_int(n))
    }

    pub fn from_rat(r: Rat) -> Self {
        Scalar::Rational(r)
    }

    /// `n/d` as a scalar.
    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::Rational(rat(n, d))
    }

    /// The root of unity `e_l^j`, demoted to a rational whenever possible.
    pub fn root_of_unity(l: u32, j: i64) -> Self {
        assert!(l >= 1);
        let j = j.rem_euclid(l as i64) as u32;
        match l {
            1 => Scalar::one(),
            2 => {
                if j == 0 {
                    Scalar::one()
                } else {
                    Scalar::from_int(-1)
                }
            }
            _ => {
                let t = field_table(l);
                Scalar::from_coeffs(l, t.pow_red[j as usize].clone())
            }
        }
    }

    /// Build from a little-endian coefficient vector over `1, e, e^2, ...`,
    /// normalizing and demoting to a rational when the tail vanishes.
    pub fn from_coeffs(l: u32, mut coeffs: Vec<Rat>) -> Self {
        rpoly_trim(&mut coeffs);
        if coeffs.len() <= 1 {
            return Scalar::Rational(coeffs.pop().unwrap_or_else(Rat::zero));
        }
        debug_assert!(l >= 3 && coeffs.len() <= phi(l));
        Scalar::Cyclotomic(Cyc { order: l, coeffs })
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Cyclotomic(_) => false,
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_one())
    }

    /// 1 for rationals, l for true elements of `Q(e_l)`.
    pub fn order(&self) -> u32 {
        match self {
            Scalar::Rational(_) => 1,
            Scalar::Cyclotomic(c) => c.order,
        }
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Cyclotomic(_) => None,
        }
    }

    fn lift(&self, l: u32, deg: usize) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); deg];
        match self {
            Scalar::Rational(r) => v[0] = r.clone(),
            Scalar::Cyclotomic(c) => {
                assert_eq!(c.order, l, "mixed cyclotomic orders {} and {}", c.order, l);
                v[..c.coeffs.len()].clone_from_slice(&c.coeffs);
            }
        }
        v
    }

    fn join_order(&self, other: &Scalar) -> u32 {
        match (self.order(), other.order()) {
            (1, o) | (o, 1) => o,
            (a, b) => {
                assert_eq!(a, b, "mixed cyclotomic orders {a} and {b}");
                a
            }
        }
    }

    /// Multiplicative inverse. Fails on zero.
    pub fn inv(&self) -> Result<Scalar> {
        match self {
            Scalar::Rational(r) => {
                if r.is_zero() {
                    Err(Error::domain("inversion of zero"))
                } else {
                    Ok(Scalar::Rational(r.recip()))
                }
            }
            Scalar::Cyclotomic(c) => {
                let t = field_table(c.order);
                let u = rpoly_inverse_mod(&c.coeffs, &t.minimal);
                Ok(Scalar::from_coeffs(c.order, u))
            }
        }
    }

    /// `self / other`. Fails on division by zero.
    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self * &other.inv()?)
    }

    /// Nonnegative integer power.
    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Integer power, negative exponents through inversion.
    pub fn pow_i(&self, e: i64) -> Result<Scalar> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            Ok(self.inv()?.pow((-e) as u32))
        }
    }
}

impl<'b> Add<&'b Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'b Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            _ => {
                let l = self.join_order(rhs);
                let deg = field_table(l).phi;
                let mut a = self.lift(l, deg);
                let b = rhs.lift(l, deg);
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                Scalar::from_coeffs(l, a)
            }
        }
    }
}

impl<'b> Sub<&'b Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'b Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Cyclotomic(c) => Scalar::Cyclotomic(Cyc {
                order: c.order,
                coeffs: c.coeffs.iter().map(|x| -x).collect(),
            }),
        }
    }
}

impl<'b> Mul<&'b Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'b Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Rational(a), Scalar::Cyclotomic(c))
            | (Scalar::Cyclotomic(c), Scalar::Rational(a)) => {
                if a.is_zero() {
                    return Scalar::zero();
                }
                Scalar::from_coeffs(c.order, c.coeffs.iter().map(|x| x * a).collect())
            }
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) => {
                assert_eq!(a.order, b.order, "mixed cyclotomic orders");
                let t = field_table(a.order);
                let conv = rpoly_mul(&a.coeffs, &b.coeffs);
                let mut out = vec![Rat::zero(); t.phi];
                for (i, c) in conv.into_iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    if i < t.phi {
                        out[i] += c;
                    } else {
                        for (j, r) in t.pow_red[i].iter().enumerate() {
                            out[j] += &c * r;
                        }
                    }
                }
                Scalar::from_coeffs(a.order, out)
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Cyclotomic(c) => {
                let mut first = true;
                for (i, coef) in c.coeffs.iter().enumerate() {
                    if coef.is_zero() {
                        continue;
                    }
                    let mag = coef.abs();
                    if first {
                        if coef.is_negative() {
                            write!(f, "-")?;
                        }
                        first = false;
                    } else if coef.is_negative() {
                        write!(f, " - ")?;
                    } else {
                        write!(f, " + ")?;
                    }
                    let power = |f: &mut fmt::Formatter<'_>| -> fmt::Result {
                        match i {
                            1 => write!(f, "e"),
                            _ => write!(f, "e^{i}"),
                        }
                    };
                    if i == 0 {
                        write!(f, "{mag}")?;
                    } else if mag.is_one() {
                        power(f)?;
                    } else {
                        write!(f, "{mag}*")?;
                        power(f)?;
                    }
                }
                if first {
                    write!(f, "0")?;
                }
                Ok(())
            }
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

// ---------------------------------------------------------------------------
// Parsing. Scalars are written as sums of terms `a/b` and `a/b*e^j`; floating
// point literals are rejected everywhere.

/// Parse an exact rational like `-3/2`. Decimal points are rejected.
pub fn parse_rational(s: &str) -> Result<Rat> {
    let s = s.trim();
    if s.contains('.') {
        return Err(Error::domain(format!(
            "'{s}': floating point literals are not accepted, use exact rationals like 3/2"
        )));
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::domain(format!("'{num}' is not an integer")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::domain(format!("'{den}' is not an integer")))?;
    if d.is_zero() {
        return Err(Error::domain("zero denominator"));
    }
    Ok(Rat::new(n, d))
}

/// Parse a scalar over `Q(e_l)`, e.g. `1/2 - 3/2*e^2`. The symbol `e` stands
/// for a fixed primitive l-th root of unity.
pub fn parse_scalar(s: &str, l: u32) -> Result<Scalar> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::domain("empty scalar"));
    }
    let mut total = Scalar::zero();
    let mut term = String::new();
    let mut sign = 1i64;
    let flush = |term: &mut String, sign: i64, total: &mut Scalar| -> Result<()> {
        if term.is_empty() {
            return Err(Error::domain("empty term in scalar expression"));
        }
        let v = parse_scalar_term(term, l)?;
        let v = if sign < 0 { -&v } else { v };
        *total = &*total + &v;
        term.clear();
        Ok(())
    };
    for ch in s.chars() {
        match ch {
            '+' | '-' => {
                if term.is_empty() {
                    if ch == '-' {
                        sign = -sign;
                    }
                } else {
                    flush(&mut term, sign, &mut total)?;
                    sign = if ch == '-' { -1 } else { 1 };
                }
            }
            _ => term.push(ch),
        }
    }
    flush(&mut term, sign, &mut total)?;
    Ok(total)
}

fn parse_scalar_term(term: &str, l: u32) -> Result<Scalar> {
    let (coef, epow) = match term.split_once('*') {
        Some((c, e)) => (c, Some(e)),
        None if term.starts_with('e') => ("1", Some(term)),
        None => (term, None),
    };
    let coef = Scalar::from_rat(parse_rational(coef)?);
    match epow {
        None => Ok(coef),
        Some(e) => {
            let j = if e == "e" {
                1
            } else if let Some(p) = e.strip_prefix("e^") {
                p.parse::<i64>()
                    .map_err(|_| Error::domain(format!("bad exponent '{p}'")))?
            } else {
                return Err(Error::domain(format!("bad term '{term}'")));
            };
            if l == 1 {
                return Err(Error::domain(
                    "the symbol e needs a nontrivial root of unity, but l = 1",
                ));
            }
            Ok(&coef * &Scalar::root_of_unity(l, j))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eps(l: u32) -> Scalar {
        Scalar::root_of_unity(l, 1)
    }

    #[test]
    fn fourth_root_squares_to_minus_one() {
        let i = eps(4);
        assert_eq!(&i * &i, Scalar::from_int(-1));
    }

    #[test]
    fn third_roots_sum_to_minus_one() {
        let e = eps(3);
        assert_eq!(&e + &(&e * &e), Scalar::from_int(-1));
    }

    #[test]
    fn inverse_in_fifth_cyclotomic_field() {
        let e = eps(5);
        let a = &Scalar::one() - &e;
        let inv = a.inv().unwrap();
        assert_eq!(&inv * &a, Scalar::one());
    }

    #[test]
    fn inversion_of_zero_rejected() {
        assert!(Scalar::zero().inv().is_err());
    }

    #[test]
    fn cyclotomic_polynomial_degrees() {
        for l in 1..=12u32 {
            assert_eq!(cyclotomic_polynomial(l).len() - 1, phi(l), "l = {l}");
        }
    }

    #[test]
    fn demotion_to_rational() {
        // e_6 - e_6 + 3 stays rational, and e_6^6 = 1.
        let e = eps(6);
        let v = &(&e - &e) + &Scalar::from_int(3);
        assert_eq!(v, Scalar::from_int(3));
        assert_eq!(e.pow(6), Scalar::one());
    }

    #[test]
    fn renders_like_a_polynomial_in_e() {
        let v = &Scalar::ratio(1, 2) - &(&Scalar::ratio(3, 2) * &Scalar::root_of_unity(5, 2));
        assert_eq!(v.to_string(), "1/2 - 3/2*e^2");
    }

    #[test]
    fn parses_scalar_expressions() {
        let v = parse_scalar("1/2 - 3/2*e^2", 5).unwrap();
        let w = &Scalar::ratio(1, 2) - &(&Scalar::ratio(3, 2) * &Scalar::root_of_unity(5, 2));
        assert_eq!(v, w);
        assert!(parse_rational("0.5").is_err());
        assert!(parse_scalar("0.5", 2).is_err());
        // signs chain through unary minus
        assert_eq!(parse_scalar("--3", 2).unwrap(), Scalar::from_int(3));
        assert_eq!(parse_scalar("1 + -2", 2).unwrap(), Scalar::from_int(-1));
        // no nontrivial root of unity over the plain rationals
        assert!(parse_scalar("1 + e", 1).is_err());
    }

    #[test]
    fn powers_with_negative_exponent() {
        let e = eps(3);
        assert_eq!(e.pow_i(-1).unwrap(), e.pow(2));
    }
}
