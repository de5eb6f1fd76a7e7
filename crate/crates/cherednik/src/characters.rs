//! Graded characters `chi_V(g, t) = Tr|_V(g t^h)`: traces on computed
//! quotients, closed-form characters of standard modules, and the
//! Euler-characteristic identity coming from the resolution of a finite
//! dimensional quotient by standard modules over exterior powers of the
//! singular-vector representation.

use crate::dunkl::{DunklContext, LowestWeight};
use crate::group::{Group, GroupElement};
use crate::linalg::Matrix;
use crate::modules::GradedQuotient;
use crate::poly::Poly;
use crate::scalar::Scalar;
use crate::series::{det_one_minus_m_tr, tpoly_div_exact, TruncSeries};
use crate::{Error, Result};

/// A truncated character: coefficients of `t^{shift + m}` for `m = 0..=N`.
#[derive(Clone, Debug, PartialEq)]
pub struct CharacterSeries {
    pub shift: Scalar,
    pub coeffs: Vec<Scalar>,
}

impl CharacterSeries {
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Re-express with a smaller shift, padding with the required power of
    /// `t`. The difference of shifts must be a nonnegative integer.
    pub fn rebase(&self, shift: &Scalar, upto: usize) -> Result<CharacterSeries> {
        let offset = &self.shift - shift;
        let off = offset
            .as_rational()
            .filter(|r| r.is_integer() && !r.numer().sign().eq(&num_bigint::Sign::Minus))
            .and_then(|r| num_traits::ToPrimitive::to_usize(&r.to_integer()))
            .ok_or_else(|| {
                Error::domain(format!(
                    "character shifts differ by {offset}, not a nonnegative integer"
                ))
            })?;
        let mut coeffs = vec![Scalar::zero(); upto + 1];
        for (m, c) in self.coeffs.iter().enumerate() {
            if m + off <= upto {
                coeffs[m + off] = c.clone();
            }
        }
        Ok(CharacterSeries {
            shift: shift.clone(),
            coeffs,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }
}

/// Exact traces of a group element on the graded components of a quotient.
/// At the identity this is the Hilbert series.
pub fn quotient_character(q: &GradedQuotient, g: &GroupElement) -> CharacterSeries {
    let n = q.nvars();
    let mut coeffs = Vec::with_capacity(q.cutoff() as usize + 1);
    for d in 0..=q.cutoff() {
        let basis = q.basis(d);
        let mut tr = Scalar::zero();
        for col in q.relations(d).free_columns() {
            let mon = basis.monomials[col].clone();
            let image = g.act_poly(&Poly::monomial(n, mon, Scalar::one()));
            let (im_mon, im_coef) = image.terms().next().expect("monomial image");
            let mut v = vec![Scalar::zero(); basis.len()];
            v[basis.index_of(im_mon)] = im_coef.clone();
            q.normal_form_vec(d, &mut v);
            tr = &tr + &v[col];
        }
        coeffs.push(tr);
    }
    CharacterSeries {
        shift: q.h_shift.clone(),
        coeffs,
    }
}

/// The representation carried by a degree-r singular copy: the reflection
/// representation for `S_n`, or the twist `h_q` of the permutation
/// representation for `G(l,1,n)` (the symmetric group permutes coordinates
/// and `s_i` scales the i-th one by `e^{-q}`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SingularRep {
    TypeAReflection,
    WreathHq { q: u32 },
}

impl SingularRep {
    pub fn dim(&self, group: &Group) -> usize {
        match self {
            SingularRep::TypeAReflection => group.n() - 1,
            SingularRep::WreathHq { .. } => group.n(),
        }
    }

    /// Matrix of `g` on `h_q` (wreath case only).
    pub fn hq_matrix(&self, group: &Group, g: &GroupElement) -> Matrix {
        let SingularRep::WreathHq { q } = self else {
            panic!("no explicit matrix for the type A reflection representation");
        };
        let n = group.n();
        let mut m = vec![vec![Scalar::zero(); n]; n];
        for i in 0..n {
            let j = g.perm()[i];
            m[j][i] = Scalar::root_of_unity(
                group.l(),
                -i64::from(*q) * i64::from(g.weights()[j]),
            );
        }
        m
    }

    /// `det|_U (1 - g t^r)` as a polynomial in `t`.
    pub fn det_one_minus_g_tr(&self, group: &Group, g: &GroupElement, r: u32) -> Result<Vec<Scalar>> {
        match self {
            SingularRep::TypeAReflection => {
                let amb = det_one_minus_m_tr(&permutation_matrix(g), r);
                // ambient C^n = reflection rep + trivial line
                let mut unit = vec![Scalar::zero(); r as usize + 1];
                unit[0] = Scalar::one();
                unit[r as usize] = Scalar::from_int(-1);
                tpoly_div_exact(&amb, &unit)
            }
            SingularRep::WreathHq { .. } => {
                Ok(det_one_minus_m_tr(&self.hq_matrix(group, g), r))
            }
        }
    }

    /// Characters of all exterior powers at `g`: coefficient `i` of
    /// `det(1 + s g|_U)` is the trace of `g` on the i-th exterior power.
    pub fn ext_power_chars(&self, group: &Group, g: &GroupElement) -> Result<Vec<Scalar>> {
        let mut det = match self {
            SingularRep::TypeAReflection => {
                let mut m = permutation_matrix(g);
                negate(&mut m);
                let amb = det_one_minus_m_tr(&m, 1);
                tpoly_div_exact(&amb, &[Scalar::one(), Scalar::one()])?
            }
            SingularRep::WreathHq { .. } => {
                let mut m = self.hq_matrix(group, g);
                negate(&mut m);
                det_one_minus_m_tr(&m, 1)
            }
        };
        det.resize(self.dim(group) + 1, Scalar::zero());
        Ok(det)
    }
}

fn negate(m: &mut Matrix) {
    for row in m.iter_mut() {
        for x in row.iter_mut() {
            *x = -&*x;
        }
    }
}

fn permutation_matrix(g: &GroupElement) -> Matrix {
    let n = g.n();
    let mut m = vec![vec![Scalar::zero(); n]; n];
    for i in 0..n {
        m[g.perm()[i]][i] = Scalar::one();
    }
    m
}

/// `det|_{h^*} (1 - g t)` over the reflection representation: for `S_n` the
/// ambient determinant loses one factor of `(1 - t)`.
pub fn dual_reflection_det(group: &Group, g: &GroupElement) -> Result<Vec<Scalar>> {
    let amb = det_one_minus_m_tr(&g.dual_matrix(), 1);
    if group.l() == 1 {
        tpoly_div_exact(&amb, &[Scalar::one(), Scalar::from_int(-1)])
    } else {
        Ok(amb)
    }
}

/// Lowest weights whose standard-module characters are available in closed
/// form.
#[derive(Clone, Copy, Debug)]
pub enum StandardWeight {
    Trivial,
    /// `eta^p` in rank one.
    Eta(u32),
    /// The i-th exterior power of a singular-vector representation.
    ExtPower(SingularRep, usize),
}

/// Closed-form character of the standard module `M_c(tau)`:
/// `chi_tau(g) t^{h(tau)} / det|_{h^*}(1 - g t)`, expanded to order `upto`.
pub fn standard_character(
    ctx: &DunklContext,
    tau: StandardWeight,
    g: &GroupElement,
    upto: usize,
) -> Result<CharacterSeries> {
    let group = ctx.group();
    let (chi_g, h_tau) = match tau {
        StandardWeight::Trivial => (Scalar::one(), ctx.lowest_eigenvalue(LowestWeight::Trivial)?),
        StandardWeight::Eta(p) => {
            let j = g.weights()[0];
            (
                Scalar::root_of_unity(group.l(), i64::from(p) * i64::from(j)),
                ctx.lowest_eigenvalue(LowestWeight::Eta(p))?,
            )
        }
        StandardWeight::ExtPower(u, i) => {
            let chi_g = u.ext_power_chars(group, g)?[i].clone();
            (chi_g, ext_power_lowest_eigenvalue(ctx, u, i)?)
        }
    };
    let den = dual_reflection_det(group, g)?;
    let inv = TruncSeries::from_poly(&den, upto).inverse()?;
    Ok(CharacterSeries {
        shift: h_tau,
        coeffs: inv.scale(&chi_g).coeffs,
    })
}

/// Lowest eigenvalue of the grading element on `M_c(wedge^i U)`: the central
/// element `sum_s (2 c_s / (1 - lambda_s)) s` acts on an irreducible by the
/// normalized character sum.
pub fn ext_power_lowest_eigenvalue(
    ctx: &DunklContext,
    u: SingularRep,
    i: usize,
) -> Result<Scalar> {
    let group = ctx.group();
    let ell = group.reflection_dim();
    let dim_tau = binomial(ell, i);
    if dim_tau == 0 {
        return Err(Error::domain(format!(
            "exterior power {i} of a {ell} dimensional space is zero"
        )));
    }
    let mut sum = Scalar::zero();
    for (idx, r) in group.reflections().iter().enumerate() {
        let chi_s = u.ext_power_chars(group, &r.element)?[i].clone();
        sum = &sum + &(ctx.weight(idx) * &chi_s);
    }
    let scaled = sum.div(&Scalar::from_int(dim_tau as i64))?;
    Ok(&Scalar::ratio(ell as i64, 2) - &scaled)
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc = 1usize;
    for t in 0..k {
        acc = acc * (n - t) / (t + 1);
    }
    acc
}

/// Closed-form character of the quotient by degree-r singular vectors:
/// `t^{h0} det|_U(1 - g t^r) / det|_{h^*}(1 - g t)`.
pub fn closed_form_quotient_character(
    ctx: &DunklContext,
    u: SingularRep,
    r: u32,
    g: &GroupElement,
    upto: usize,
) -> Result<CharacterSeries> {
    let group = ctx.group();
    let num = u.det_one_minus_g_tr(group, g, r)?;
    let den = dual_reflection_det(group, g)?;
    let series = TruncSeries::from_poly(&num, upto).mul(&TruncSeries::from_poly(&den, upto).inverse()?);
    Ok(CharacterSeries {
        shift: ctx.lowest_eigenvalue(LowestWeight::Trivial)?,
        coeffs: series.coeffs,
    })
}

/// Result of checking the Euler-characteristic identity for one conjugacy
/// class: the quotient trace, the alternating sum of standard characters over
/// exterior powers, and the closed form must agree as truncated series.
#[derive(Clone, Debug)]
pub struct EulerCheck {
    pub element: String,
    pub quotient: Vec<Scalar>,
    pub alternating_sum: Vec<Scalar>,
    pub closed_form: Vec<Scalar>,
    pub residual_alternating: Vec<Scalar>,
    pub residual_closed: Vec<Scalar>,
    pub ok: bool,
    pub note: Option<String>,
}

/// Verify `chi_A(g,t) = sum_i (-1)^i chi_{M(wedge^i U)}(g,t) = closed form`
/// up to order `upto`; the quotient must be built at least that far.
pub fn euler_character_identity(
    ctx: &DunklContext,
    u: SingularRep,
    r: u32,
    q: &GradedQuotient,
    g: &GroupElement,
    upto: usize,
) -> Result<EulerCheck> {
    if (q.cutoff() as usize) < upto {
        return Err(Error::domain(format!(
            "quotient cutoff {} is below the requested order {upto}",
            q.cutoff()
        )));
    }
    let h0 = q.h_shift.clone();
    let lhs = quotient_character(q, g).rebase(&h0, upto)?;
    let ell = u.dim(ctx.group());
    let mut alternating = vec![Scalar::zero(); upto + 1];
    let mut note = None;
    let mut ok = true;
    for i in 0..=ell {
        let ch = standard_character(ctx, StandardWeight::ExtPower(u, i), g, upto)?;
        match ch.rebase(&h0, upto) {
            Ok(based) => {
                for (a, c) in alternating.iter_mut().zip(based.coeffs) {
                    if i % 2 == 0 {
                        *a = &*a + &c;
                    } else {
                        *a = &*a - &c;
                    }
                }
            }
            Err(e) => {
                ok = false;
                note = Some(format!("exterior power {i}: {e}"));
            }
        }
    }
    let closed = closed_form_quotient_character(ctx, u, r, g, upto)?.rebase(&h0, upto)?;
    let residual_alternating: Vec<Scalar> = alternating
        .iter()
        .zip(&lhs.coeffs)
        .map(|(a, b)| a - b)
        .collect();
    let residual_closed: Vec<Scalar> = closed
        .coeffs
        .iter()
        .zip(&lhs.coeffs)
        .map(|(a, b)| a - b)
        .collect();
    ok = ok
        && residual_alternating.iter().all(Scalar::is_zero)
        && residual_closed.iter().all(Scalar::is_zero);
    Ok(EulerCheck {
        element: g.to_string(),
        quotient: lhs.coeffs,
        alternating_sum: alternating,
        closed_form: closed.coeffs,
        residual_alternating,
        residual_closed,
        ok,
        note,
    })
}
