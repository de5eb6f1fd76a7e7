//! Dunkl operators, the grading element and the sl2 pair for real groups.
//!
//! The Dunkl operator in direction `y` acts on a polynomial `f` by
//!
//! ```text
//! T_y f = d_y f - sum_s (2 c_s / (1 - lambda_s)) ((alpha_s, y) / alpha_s) (1 - s) f
//! ```
//!
//! where the sum runs over all reflections. Each summand is computed as an
//! exact polynomial division of `(f - s f)` by `alpha_s`, so a wrong root
//! vector surfaces as an integrity error instead of a silent wrong answer.
//! The operators pairwise commute and lower degree by exactly one; at `c = 0`
//! they reduce to directional derivatives.

use crate::group::{Group, Params, Reflection};
use crate::linalg::Matrix;
use crate::poly::{DegreeBasis, Poly};
use crate::scalar::Scalar;
use crate::{Error, Result};
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

/// One-dimensional lowest weights supported by the closed-form lowest
/// eigenvalue of the grading element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LowestWeight {
    Trivial,
    /// The character `eta^p` of `Z/lZ`; rank one only.
    Eta(u32),
}

/// A reflection group together with a parameter function; owns the
/// per-reflection Dunkl weights `2 c_s / (1 - lambda_s)` and a cache of
/// graded operator matrices.
pub struct DunklContext<'g> {
    group: &'g Group,
    params: Params,
    weights: Vec<Scalar>,
    cache: Mutex<HashMap<(u32, usize), Arc<Matrix>>>,
}

impl<'g> DunklContext<'g> {
    pub fn new(group: &'g Group, params: Params) -> Result<Self> {
        params.validate(group)?;
        let weights = group
            .reflections()
            .iter()
            .map(|r| {
                let denom = &Scalar::one() - &r.lambda;
                (&Scalar::from_int(2) * params.value(r)).div(&denom)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(DunklContext {
            group,
            params,
            weights,
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn group(&self) -> &'g Group {
        self.group
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    /// `2 c_s / (1 - lambda_s)` for reflection index `idx`.
    pub fn weight(&self, idx: usize) -> &Scalar {
        &self.weights[idx]
    }

    /// True when the group is a real reflection group (`l <= 2`).
    pub fn is_real(&self) -> bool {
        self.group.l() <= 2
    }

    /// Apply the Dunkl operator in coordinate direction `dir`.
    pub fn apply_dir(&self, dir: usize, f: &Poly<Scalar>) -> Result<Poly<Scalar>> {
        let n = self.group.n();
        assert!(dir < n, "direction out of range");
        let mut out = f.derivative(dir);
        for (r, w) in self.group.reflections().iter().zip(&self.weights) {
            if w.is_zero() {
                continue;
            }
            let pairing = &r.alpha[dir];
            if pairing.is_zero() {
                continue;
            }
            let dd = r.divided_difference(f)?;
            out = out.sub(&dd.scale(&(w * pairing)));
        }
        Ok(out)
    }

    /// Apply the Dunkl operator in an arbitrary direction `y`.
    pub fn apply(&self, y: &[Scalar], f: &Poly<Scalar>) -> Result<Poly<Scalar>> {
        let n = self.group.n();
        assert_eq!(y.len(), n, "direction dimension mismatch");
        let mut out = Poly::zero(n);
        for (i, c) in y.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            out = out.add(&self.apply_dir(i, f)?.scale(c));
        }
        Ok(out)
    }

    /// Matrix of `T_{e_dir}` from the degree `d` component to degree `d - 1`,
    /// in the graded monomial bases. Cached per `(d, dir)`.
    pub fn matrix(&self, dir: usize, d: u32) -> Result<Arc<Matrix>> {
        if let Some(m) = self.cache.lock().unwrap().get(&(d, dir)) {
            return Ok(Arc::clone(m));
        }
        let n = self.group.n();
        let src = DegreeBasis::new(n, d);
        let dst = DegreeBasis::new(n, d.saturating_sub(1));
        let rows = if d == 0 { 0 } else { dst.len() };
        let mut mat = vec![vec![Scalar::zero(); src.len()]; rows];
        for (j, m) in src.monomials.iter().enumerate() {
            let image = self.apply_dir(dir, &Poly::monomial(n, m.clone(), Scalar::one()))?;
            for (mm, c) in image.terms() {
                mat[dst.index_of(mm)][j] = c.clone();
            }
        }
        let arc = Arc::new(mat);
        self.cache
            .lock()
            .unwrap()
            .insert((d, dir), Arc::clone(&arc));
        Ok(arc)
    }

    /// Dimension of the reflection representation.
    pub fn reflection_dim(&self) -> usize {
        self.group.reflection_dim()
    }

    /// Lowest eigenvalue of the grading element on the standard module with
    /// the given one-dimensional lowest weight:
    /// `h(tau) = l/2 - sum_s (2 c_s / (1 - lambda_s)) tau(s)`.
    pub fn lowest_eigenvalue(&self, tau: LowestWeight) -> Result<Scalar> {
        let ell = self.reflection_dim();
        let half_ell = Scalar::ratio(ell as i64, 2);
        let mut sum = Scalar::zero();
        for (r, w) in self.group.reflections().iter().zip(&self.weights) {
            let tau_s = match tau {
                LowestWeight::Trivial => Scalar::one(),
                LowestWeight::Eta(p) => {
                    if self.group.n() != 1 {
                        return Err(Error::domain(
                            "eta lowest weights are only supported in rank one",
                        ));
                    }
                    let m = r.element.weights()[0];
                    Scalar::root_of_unity(self.group.l(), i64::from(p) * i64::from(m))
                }
            };
            sum = &sum + &(w * &tau_s);
        }
        Ok(&half_ell - &sum)
    }

    /// Lowest eigenvalue of the grading element on the ambient polynomial
    /// ring `C[x_1..x_n]`. For `S_n` this exceeds the reflection value by the
    /// `1/2` of the extra coordinate; for `l >= 2` the two agree.
    pub fn h0_ambient(&self) -> Scalar {
        let mut sum = Scalar::zero();
        for w in &self.weights {
            sum = &sum + w;
        }
        &Scalar::ratio(self.group.n() as i64, 2) - &sum
    }

    /// The full grading operator on the ambient polynomial ring:
    /// `h f = sum_i x_i T_i f + (n/2) f - sum_s w_s (s f)`.
    /// It acts on every homogeneous polynomial of degree `m` by
    /// `h0_ambient + m`.
    pub fn grading_apply(&self, f: &Poly<Scalar>) -> Result<Poly<Scalar>> {
        let n = self.group.n();
        let mut out = f.scale(&Scalar::ratio(n as i64, 2));
        for i in 0..n {
            let ti = self.apply_dir(i, f)?;
            out = out.add(&ti.mul(&Poly::var(n, i)));
        }
        for (r, w) in self.group.reflections().iter().zip(&self.weights) {
            if w.is_zero() {
                continue;
            }
            out = out.sub(&r.element.act_poly(f).scale(w));
        }
        Ok(out)
    }

    /// The raising operator `E`, multiplication by `(1/2) sum x_i^2`.
    pub fn raise_apply(&self, f: &Poly<Scalar>) -> Result<Poly<Scalar>> {
        self.require_real()?;
        let n = self.group.n();
        let mut q = Poly::zero(n);
        for i in 0..n {
            q = q.add(&Poly::var(n, i).mul(&Poly::var(n, i)));
        }
        Ok(q.mul(f).scale(&Scalar::ratio(1, 2)))
    }

    /// The lowering operator `F = -(1/2) sum T_i^2`, normalized so that
    /// `[E, F] = h` on every graded component.
    pub fn lower_apply(&self, f: &Poly<Scalar>) -> Result<Poly<Scalar>> {
        self.require_real()?;
        let n = self.group.n();
        let mut out = Poly::zero(n);
        for i in 0..n {
            out = out.add(&self.apply_dir(i, &self.apply_dir(i, f)?)?);
        }
        Ok(out.scale(&Scalar::ratio(-1, 2)))
    }

    fn require_real(&self) -> Result<()> {
        if self.is_real() {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "{} is not a real reflection group, the sl2 pair is unavailable",
                self.group.descriptor()
            )))
        }
    }

    /// Directions spanning the space the module theory lives on: for `S_n`
    /// the sum-zero hyperplane (so the ideal generated by `x_1 + .. + x_n`
    /// stays a module), the full coordinate basis otherwise.
    pub fn module_directions(&self) -> Vec<Vec<Scalar>> {
        let n = self.group.n();
        if self.group.l() == 1 {
            (0..n - 1)
                .map(|a| {
                    let mut y = vec![Scalar::zero(); n];
                    y[a] = Scalar::one();
                    y[n - 1] = Scalar::from_int(-1);
                    y
                })
                .collect()
        } else {
            (0..n)
                .map(|i| {
                    let mut y = vec![Scalar::zero(); n];
                    y[i] = Scalar::one();
                    y
                })
                .collect()
        }
    }

    /// Verify `[T_y, T_{y'}] = 0` on all monomials of degree up to `max_deg`
    /// for all coordinate direction pairs. Returns the first failure.
    pub fn check_commutativity(&self, max_deg: u32) -> Result<()> {
        let n = self.group.n();
        for d in 1..=max_deg {
            for m in crate::poly::graded_basis(n, d) {
                let f = Poly::monomial(n, m.clone(), Scalar::one());
                let mut images = Vec::with_capacity(n);
                for i in 0..n {
                    images.push(self.apply_dir(i, &f)?);
                }
                for i in 0..n {
                    for j in i + 1..n {
                        let ij = self.apply_dir(i, &images[j])?;
                        let ji = self.apply_dir(j, &images[i])?;
                        if ij != ji {
                            return Err(Error::integrity(format!(
                                "Dunkl operators {i} and {j} fail to commute on degree {d}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Verify the equivariance `g T_y g^{-1} = T_{g y}` on all monomials of
    /// degree up to `max_deg`, sweeping all group elements and coordinate
    /// directions.
    pub fn check_equivariance(&self, max_deg: u32) -> Result<()> {
        let n = self.group.n();
        for g in self.group.elements() {
            let ginv = g.inverse();
            // images of the coordinate directions under g acting on the space
            let gy: Vec<Vec<Scalar>> = (0..n)
                .map(|i| {
                    let mut y = vec![Scalar::zero(); n];
                    y[i] = Scalar::one();
                    g.act_vector(&y)
                })
                .collect();
            for d in 1..=max_deg {
                for m in crate::poly::graded_basis(n, d) {
                    let f = Poly::monomial(n, m.clone(), Scalar::one());
                    for i in 0..n {
                        let lhs = g.act_poly(&self.apply_dir(i, &ginv.act_poly(&f))?);
                        let rhs = self.apply(&gy[i], &f)?;
                        if lhs != rhs {
                            return Err(Error::integrity(format!(
                                "equivariance fails for element {g} direction {i} degree {d}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

impl Reflection {
    /// The divided difference `(f - s f) / alpha_s`, always an exact
    /// polynomial division for a correct root vector.
    pub fn divided_difference(&self, f: &Poly<Scalar>) -> Result<Poly<Scalar>> {
        let n = self.alpha.len();
        let num = f.sub(&self.element.act_poly(f));
        if num.is_zero() {
            return Ok(Poly::zero(n));
        }
        num.exact_div(&self.alpha_poly(n))
    }
}
