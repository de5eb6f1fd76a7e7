//! Closed-form singular vectors and parameter loci.
//!
//! Both families come from residues at infinity of explicit differentials
//! and are extracted here as coefficients of truncated binomial series, with
//! the convention `Res_inf = -(coefficient of z^{-1})`.
//!
//! Type A (`S_n`, `k = r/n`, `n` not dividing `r`): expanding around infinity
//! in `u = 1/z`,
//!
//! ```text
//! f_i = Res_inf [(z-x_1)...(z-x_n)]^{r/n} dz/(z-x_i)
//!     = -[u^r] (1 - x_i u)^{k-1} prod_{j != i} (1 - x_j u)^k
//! ```
//!
//! Wreath (`G(l,1,n)`, `r = (p-1)l + q`): in `w = 1/z^l` the integrand turns
//! into `x_i^q` times a series whose `w^{p-1}` coefficient carries the vector,
//!
//! ```text
//! f_i = -x_i^q [w^{p-1}] (1 - x_i^l w)^{kappa-1} prod_{j != i} (1 - x_j^l w)^kappa
//!       / ((kappa-1)...(kappa-s))
//! ```
//!
//! computed symbolically in the formal parameter `kappa`, divided exactly by
//! the normalization product (the unnormalized coefficient vanishes at the
//! integer points `kappa = 1..s`), and only then specialized at `kappa = k`.
//! This keeps the vectors nonzero at every parameter on the locus `E_r`.

use crate::dunkl::DunklContext;
use crate::linalg::kernel_basis;
use crate::param_poly::ParamPoly;
use crate::poly::{DegreeBasis, Monomial, Poly};
use crate::scalar::{rat_int, Rat, Scalar};
use crate::{Error, Result};
use num_traits::{One, Signed};

/// Parameters of the type A construction: `k = r/n` with `n` not dividing `r`.
#[derive(Clone, Debug, PartialEq)]
pub struct TypeAParams {
    pub n: usize,
    pub r: u32,
    pub k: Rat,
    /// `gcd(r, n)`.
    pub d: u32,
}

impl TypeAParams {
    pub fn new(n: usize, r: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::domain("type A needs n >= 2"));
        }
        if r == 0 || r.is_multiple_of(n as u32) {
            return Err(Error::domain(format!(
                "r = {r} must be positive and not divisible by n = {n}"
            )));
        }
        Ok(TypeAParams {
            n,
            r,
            k: Rat::new(r.into(), (n as u32).into()),
            d: gcd(r, n as u32),
        })
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Generalized binomial coefficient `binom(a, m)` for rational `a`.
fn rat_binomial(a: &Rat, m: u32) -> Rat {
    let mut num = Rat::one();
    for t in 0..i64::from(m) {
        num *= a - rat_int(t);
    }
    let mut fact = Rat::one();
    for t in 1..=i64::from(m) {
        fact *= rat_int(t);
    }
    num / fact
}

/// `binom(kappa + shift, m)` as a polynomial in the formal parameter.
fn param_binomial(shift: i64, m: u32) -> ParamPoly {
    let mut num = ParamPoly::one();
    for t in 0..i64::from(m) {
        let constant = Scalar::from_int(shift - t);
        num = num.mul(&ParamPoly::from_coeffs(vec![constant, Scalar::one()]));
    }
    let mut fact = Scalar::one();
    for t in 1..=i64::from(m) {
        fact = &fact * &Scalar::from_int(t);
    }
    num.scale(&fact.inv().expect("factorial nonzero"))
}

/// Truncated product of the binomial series
/// `prod_j (1 - x_j^step u)^{a_j}` up to `u^upto`, with generic coefficients.
fn binomial_series_product<C, F>(
    nvars: usize,
    step: u32,
    exponents: F,
    upto: u32,
) -> Vec<Poly<C>>
where
    C: crate::poly::Coeff,
    F: Fn(usize, u32) -> C,
{
    let mut acc: Vec<Poly<C>> = (0..=upto)
        .map(|m| {
            if m == 0 {
                Poly::constant(nvars, C::one())
            } else {
                Poly::zero(nvars)
            }
        })
        .collect();
    for j in 0..nvars {
        let factor: Vec<Poly<C>> = (0..=upto)
            .map(|m| {
                let mut e = vec![0u32; nvars];
                e[j] = step * m;
                let mut p = Poly::zero(nvars);
                p.add_term(Monomial(e), exponents(j, m));
                p
            })
            .collect();
        let mut next: Vec<Poly<C>> = (0..=upto).map(|_| Poly::zero(nvars)).collect();
        for (a, acc_a) in acc.iter().enumerate() {
            if acc_a.is_zero() {
                continue;
            }
            for (b, factor_b) in factor.iter().enumerate().take(upto as usize + 1 - a) {
                if factor_b.is_zero() {
                    continue;
                }
                next[a + b] = next[a + b].add(&acc_a.mul(factor_b));
            }
        }
        acc = next;
    }
    acc
}

/// The degree-r singular copy of the reflection representation in the type A
/// polynomial module at `k = r/n`: homogeneous `f_1..f_n` with
/// `sum_i f_i = 0`, each killed by every Dunkl operator.
pub fn type_a_singular(params: &TypeAParams) -> Vec<Poly<Scalar>> {
    let n = params.n;
    let k = &params.k;
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        // (1 - x_i u)^{k-1} prod_{j != i} (1 - x_j u)^k
        let series = binomial_series_product::<Scalar, _>(
            n,
            1,
            |j, m| {
                let a = if j == i { k - Rat::one() } else { k.clone() };
                let sign = if m % 2 == 0 { Rat::one() } else { -Rat::one() };
                Scalar::from_rat(rat_binomial(&a, m) * sign)
            },
            params.r,
        );
        out.push(series[params.r as usize].neg());
    }
    out
}

/// Parameters of the wreath construction for `G(l,1,n)`:
/// `r = (p-1) l + q` with `1 <= q <= l-1`, and `s` the largest integer
/// strictly below `p/n`.
#[derive(Clone, Debug, PartialEq)]
pub struct WreathParams {
    pub l: u32,
    pub n: usize,
    pub r: u32,
    pub p: u32,
    pub q: u32,
    pub s: u32,
    pub k: Scalar,
    /// `c_1 .. c_{l-1}`.
    pub c: Vec<Scalar>,
}

impl WreathParams {
    pub fn new(l: u32, n: usize, r: u32, k: Scalar, c: Vec<Scalar>) -> Result<Self> {
        if l < 2 || n < 1 {
            return Err(Error::domain("wreath parameters need l >= 2, n >= 1"));
        }
        if r == 0 || r.is_multiple_of(l) {
            return Err(Error::domain(format!(
                "r = {r} must be positive and not divisible by l = {l}"
            )));
        }
        if c.len() != (l - 1) as usize {
            return Err(Error::domain(format!(
                "expected {} diagonal parameters, got {}",
                l - 1,
                c.len()
            )));
        }
        let q = r % l;
        let p = (r - q) / l + 1;
        let s = (p - 1) / n as u32;
        Ok(WreathParams { l, n, r, p, q, s, k, c })
    }

    /// Solve the hyperplane equation for the last diagonal parameter, given
    /// the first `l-2` of them. The coefficient of `c_{l-1}` never vanishes.
    pub fn solving_er(l: u32, n: usize, r: u32, k: Scalar, mut c: Vec<Scalar>) -> Result<Self> {
        if c.len() + 1 != (l - 1) as usize {
            return Err(Error::domain(format!(
                "expected {} diagonal parameters before solving, got {}",
                l - 2,
                c.len()
            )));
        }
        c.push(Scalar::zero());
        let probe = WreathParams::new(l, n, r, k, c)?;
        let residual = probe.er_residual()?;
        let j = i64::from(l - 1);
        let coeff = er_coefficient(l, probe.q, j)?;
        let mut params = probe;
        params.c[(l - 2) as usize] = (-&residual).div(&coeff)?;
        debug_assert!(params.er_residual()?.is_zero());
        Ok(params)
    }

    /// Left side minus right side of the defining equation of `E_r`:
    /// `l (n-1) k + 2 sum_j c_j (1 - e^{-j q}) / (1 - e^{-j}) - r`.
    pub fn er_residual(&self) -> Result<Scalar> {
        let mut acc = &Scalar::from_int(i64::from(self.l) * (self.n as i64 - 1)) * &self.k;
        for (idx, cj) in self.c.iter().enumerate() {
            let j = idx as i64 + 1;
            acc = &acc + &(cj * &er_coefficient(self.l, self.q, j)?);
        }
        Ok(&acc - &Scalar::from_int(i64::from(self.r)))
    }

    pub fn on_er(&self) -> Result<bool> {
        Ok(self.er_residual()?.is_zero())
    }

    /// Membership of a rational `k` in the finite set
    /// `Sigma_r = { P/Q : (P,Q) = 1, 1 <= P <= p-1, 1 <= Q <= n }` of values
    /// where the quotient by the singular ideal stays infinite dimensional.
    pub fn sigma_r_contains(&self, k: &Rat) -> bool {
        if !k.is_positive() {
            return false;
        }
        let p_ok = k.numer() >= &num_bigint::BigInt::from(1)
            && k.numer() <= &num_bigint::BigInt::from(self.p.saturating_sub(1));
        let q_ok = k.denom() <= &num_bigint::BigInt::from(self.n as u32);
        p_ok && q_ok
    }

    /// The whole set `Sigma_r`, enumerated in increasing order.
    pub fn sigma_r(&self) -> Vec<Rat> {
        let mut set = Vec::new();
        for pp in 1..self.p {
            for qq in 1..=self.n as u32 {
                if gcd(pp, qq) == 1 {
                    set.push(Rat::new(pp.into(), qq.into()));
                }
            }
        }
        set.sort();
        set.dedup();
        set
    }
}

/// Coefficient `2 (1 - e^{-j q}) / (1 - e^{-j})` of `c_j` in the hyperplane
/// equation.
fn er_coefficient(l: u32, q: u32, j: i64) -> Result<Scalar> {
    let num = &Scalar::one() - &Scalar::root_of_unity(l, -j * i64::from(q));
    let den = &Scalar::one() - &Scalar::root_of_unity(l, -j);
    (&Scalar::from_int(2) * &num).div(&den)
}

/// The degree-r singular copy of `h_q` in the wreath polynomial module for
/// parameters on `E_r`. Coefficients are assembled as polynomials in the
/// formal parameter, divided exactly by `(kappa-1)...(kappa-s)` and evaluated
/// at `kappa = k`; a nonzero division remainder is an integrity error.
pub fn wreath_singular(params: &WreathParams) -> Result<Vec<Poly<Scalar>>> {
    if !params.on_er()? {
        return Err(Error::domain(format!(
            "parameters are not on E_{} (residual {})",
            params.r,
            params.er_residual()?
        )));
    }
    let n = params.n;
    let norm = ParamPoly::falling_product(params.s);
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        // (1 - x_i^l w)^{kappa-1} prod_{j != i} (1 - x_j^l w)^kappa
        let series = binomial_series_product::<ParamPoly, _>(
            n,
            params.l,
            |j, m| {
                let shift = if j == i { -1 } else { 0 };
                let b = param_binomial(shift, m);
                if m % 2 == 0 {
                    b
                } else {
                    b.neg()
                }
            },
            params.p - 1,
        );
        let symbolic = &series[(params.p - 1) as usize];
        let mut xi_q = vec![0u32; n];
        xi_q[i] = params.q;
        let shifted = symbolic.mul_monomial(&Monomial(xi_q), &ParamPoly::one());
        let mut f = Poly::zero(n);
        for (mon, coeff) in shifted.terms() {
            let divided = coeff.div_exact(&norm)?;
            f.add_term(mon.clone(), -&divided.eval(&params.k));
        }
        out.push(f);
    }
    Ok(out)
}

/// Exact kernel of the stacked Dunkl matrices in one degree: a basis of the
/// space of singular vectors, i.e. homogeneous polynomials killed by every
/// Dunkl operator.
pub fn generic_singular_solver(ctx: &DunklContext, degree: u32) -> Result<Vec<Poly<Scalar>>> {
    if degree == 0 {
        return Err(Error::domain("singular vectors live in positive degree"));
    }
    let n = ctx.group().n();
    let src = DegreeBasis::new(n, degree);
    let mut stacked = Vec::new();
    for dir in 0..n {
        let m = ctx.matrix(dir, degree)?;
        stacked.extend(m.iter().cloned());
    }
    Ok(kernel_basis(stacked)
        .into_iter()
        .map(|v| src.to_poly(&v))
        .collect())
}
