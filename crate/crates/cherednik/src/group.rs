//! The complex reflection groups `G(l,1,n) = S_n ⋉ (Z/lZ)^n`, together with
//! their reflections, reflection covectors and parameter functions. `l = 1`
//! recovers `S_n` and `n = 1` recovers `Z/lZ`.
//!
//! Conventions, fixed once and tested against the matrix representation:
//!
//! - A group element is a pair `(perm, weights)` acting on a point
//!   `v ∈ C^n` by `(g v)_i = e^{w_i} v_{perm^{-1}(i)}` where `e = e_l`.
//!   Composition is `(p1, w1)(p2, w2) = (p1 ∘ p2, w1 + p1·w2)`, matching
//!   matrix multiplication of the monomial matrices.
//! - On coordinates (elements of the dual space) the action is
//!   `g · x_i = e^{-w_{perm(i)}} x_{perm(i)}`, i.e. `(g f)(v) = f(g^{-1} v)`.
//! - The reflections are `s_i^m` (scale coordinate `i` by `e^m`, `1 <= m < l`)
//!   and `sigma_{i,j}^{(m)}` (send `v_i, v_j` to `e^m v_j, e^{-m} v_i`,
//!   `i < j`, `0 <= m < l`). Each reflection stores `alpha` (a linear form
//!   vanishing on its fixed hyperplane), `alpha_check` with
//!   `(alpha_check, alpha) = 2`, and `lambda`, its nontrivial eigenvalue on
//!   the dual reflection representation, computed from the matrix trace
//!   rather than assumed per family.

use crate::poly::{Coeff, Monomial, Poly};
use crate::scalar::Scalar;
use crate::{Error, Result};
use std::collections::HashMap;
use std::fmt;

/// Element of `S_n ⋉ (Z/lZ)^n` as a permutation plus weight vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupElement {
    l: u32,
    /// `perm[i]` is the image of `i` (0-based).
    perm: Vec<usize>,
    /// Residues modulo `l`.
    weights: Vec<u32>,
}

impl GroupElement {
    pub fn new(l: u32, perm: Vec<usize>, weights: Vec<i64>) -> Self {
        let n = perm.len();
        assert_eq!(weights.len(), n);
        let mut seen = vec![false; n];
        for &p in &perm {
            assert!(p < n && !seen[p], "not a permutation");
            seen[p] = true;
        }
        GroupElement {
            l,
            perm,
            weights: weights
                .into_iter()
                .map(|w| w.rem_euclid(l as i64) as u32)
                .collect(),
        }
    }

    pub fn identity(l: u32, n: usize) -> Self {
        GroupElement {
            l,
            perm: (0..n).collect(),
            weights: vec![0; n],
        }
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| p == i)
            && self.weights.iter().all(|&w| w == 0)
    }

    /// Group law: `self` after `other`, i.e. the matrix product.
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        assert_eq!(self.l, other.l);
        let n = self.n();
        let perm = (0..n).map(|i| self.perm[other.perm[i]]).collect();
        let weights = (0..n)
            .map(|i| {
                // (w1 + p1·w2)_i = w1_i + w2_{p1^{-1}(i)}
                let pre = self.perm.iter().position(|&p| p == i).unwrap();
                (self.weights[i] + other.weights[pre]) % self.l
            })
            .collect();
        GroupElement {
            l: self.l,
            perm,
            weights,
        }
    }

    pub fn inverse(&self) -> GroupElement {
        let n = self.n();
        let mut perm = vec![0; n];
        let mut weights = vec![0; n];
        for i in 0..n {
            perm[self.perm[i]] = i;
        }
        for i in 0..n {
            weights[i] = (self.l - self.weights[perm[i]]) % self.l;
        }
        GroupElement {
            l: self.l,
            perm,
            weights,
        }
    }

    /// Action on a point of `C^n`: `(g v)_i = e^{w_i} v_{perm^{-1}(i)}`.
    pub fn act_vector(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.n(), "dimension mismatch");
        let inv = self.inverse();
        (0..self.n())
            .map(|i| &Scalar::root_of_unity(self.l, i64::from(self.weights[i])) * &v[inv.perm[i]])
            .collect()
    }

    /// Matrix of the contragredient action on coordinates:
    /// `g · x_i = e^{-w_{perm(i)}} x_{perm(i)}`. Column `i` holds the image
    /// of `x_i` in the coordinate basis.
    pub fn dual_matrix(&self) -> Vec<Vec<Scalar>> {
        let n = self.n();
        let mut m = vec![vec![Scalar::zero(); n]; n];
        for i in 0..n {
            let j = self.perm[i];
            m[j][i] = Scalar::root_of_unity(self.l, -i64::from(self.weights[j]));
        }
        m
    }

    /// Action on polynomials, `(g f)(v) = f(g^{-1} v)`; a ring homomorphism
    /// sending the monomial `x^mu` to a scaled monomial.
    pub fn act_poly<C: Coeff>(&self, f: &Poly<C>) -> Poly<C> {
        let n = self.n();
        assert_eq!(f.nvars(), n, "dimension mismatch");
        let mut out = Poly::zero(n);
        for (m, c) in f.terms() {
            let mut exps = vec![0u32; n];
            let mut epow: i64 = 0;
            for i in 0..n {
                let j = self.perm[i];
                exps[j] = m.0[i];
                epow -= i64::from(self.weights[j]) * i64::from(m.0[i]);
            }
            let root = Scalar::root_of_unity(self.l, epow);
            out.add_term(Monomial(exps), c.scale(&root));
        }
        out
    }

    /// Trace of the contragredient action on coordinates.
    pub fn dual_trace(&self) -> Scalar {
        let mut tr = Scalar::zero();
        for i in 0..self.n() {
            if self.perm[i] == i {
                tr = &tr + &Scalar::root_of_unity(self.l, -i64::from(self.weights[i]));
            }
        }
        tr
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let perm: Vec<String> = self.perm.iter().map(|p| (p + 1).to_string()).collect();
        let w: Vec<String> = self.weights.iter().map(u32::to_string).collect();
        write!(f, "perm[{}] w[{}]", perm.join(","), w.join(","))
    }
}

/// Which family a reflection belongs to; determines its parameter value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReflectionKind {
    /// `s_i^m`: coordinate `i` scaled by `e^m`, `1 <= m < l`.
    Diagonal { i: usize, m: u32 },
    /// `sigma_{i,j}^{(m)}`, `i < j`, `0 <= m < l`.
    Swap { i: usize, j: usize, m: u32 },
}

/// A complex reflection with its root data.
#[derive(Clone, Debug)]
pub struct Reflection {
    pub element: GroupElement,
    pub kind: ReflectionKind,
    /// Linear form on the space, vanishing on the fixed hyperplane.
    pub alpha: Vec<Scalar>,
    /// Linear form on the dual, with `(alpha_check, alpha) = 2`.
    pub alpha_check: Vec<Scalar>,
    /// Nontrivial eigenvalue on the dual reflection representation.
    pub lambda: Scalar,
}

impl Reflection {
    /// Pairing of `alpha` against a direction vector in the space.
    pub fn alpha_at(&self, y: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (a, v) in self.alpha.iter().zip(y) {
            if !a.is_zero() && !v.is_zero() {
                acc = &acc + &(a * v);
            }
        }
        acc
    }

    pub fn alpha_poly(&self, n: usize) -> Poly<Scalar> {
        assert_eq!(self.alpha.len(), n);
        Poly::linear_form(&self.alpha)
    }
}

/// A built reflection group: `S(n)`, `Z(l)` or `G(l,1,n)`.
#[derive(Debug)]
pub struct Group {
    l: u32,
    n: usize,
    reflections: Vec<Reflection>,
    elements: Vec<GroupElement>,
}

impl Group {
    /// Build `G(l,1,n)` with all of its reflections. `(l,n) = (1,1)` is the
    /// trivial group without reflections and is rejected.
    pub fn build(l: u32, n: usize) -> Result<Group> {
        if l < 1 || n < 1 {
            return Err(Error::domain("l and n must be positive"));
        }
        if l == 1 && n == 1 {
            return Err(Error::domain("G(1,1,1) is trivial and has no reflections"));
        }
        let order = (l as u128).pow(n as u32) * factorial(n);
        if order > 2_000_000 {
            return Err(Error::domain(format!("group order {order} too large")));
        }

        let mut reflections = Vec::new();
        // diagonal reflections s_i^m
        for i in 0..n {
            for m in 1..l {
                let mut weights = vec![0i64; n];
                weights[i] = i64::from(m);
                let element = GroupElement::new(l, (0..n).collect(), weights);
                let mut alpha = vec![Scalar::zero(); n];
                alpha[i] = Scalar::one();
                let mut alpha_check = vec![Scalar::zero(); n];
                alpha_check[i] = Scalar::from_int(2);
                reflections.push(Reflection {
                    element,
                    kind: ReflectionKind::Diagonal { i, m },
                    alpha,
                    alpha_check,
                    lambda: Scalar::zero(), // filled below
                });
            }
        }
        // swap reflections sigma_{i,j}^{(m)}
        for i in 0..n {
            for j in i + 1..n {
                for m in 0..l {
                    let mut perm: Vec<usize> = (0..n).collect();
                    perm.swap(i, j);
                    let mut weights = vec![0i64; n];
                    weights[i] = i64::from(m);
                    weights[j] = -i64::from(m);
                    let element = GroupElement::new(l, perm, weights);
                    // alpha = x_i - e^m x_j vanishes on the fixed hyperplane
                    let mut alpha = vec![Scalar::zero(); n];
                    alpha[i] = Scalar::one();
                    alpha[j] = -&Scalar::root_of_unity(l, i64::from(m));
                    // alpha_check = e_i - e^{-m} e_j pairs to 2 with alpha
                    let mut alpha_check = vec![Scalar::zero(); n];
                    alpha_check[i] = Scalar::one();
                    alpha_check[j] = -&Scalar::root_of_unity(l, -i64::from(m));
                    reflections.push(Reflection {
                        element,
                        kind: ReflectionKind::Swap { i, j, m },
                        alpha,
                        alpha_check,
                        lambda: Scalar::zero(),
                    });
                }
            }
        }

        // fill in lambda from the dual matrix and verify the root data
        for r in reflections.iter_mut() {
            let tr = r.element.dual_trace();
            let lambda = &tr - &Scalar::from_int(n as i64 - 1);
            if lambda.is_one() {
                return Err(Error::integrity("reflection with trivial eigenvalue"));
            }
            // alpha spans the lambda eigenline of the dual action
            let mat = r.element.dual_matrix();
            let image = crate::linalg::matrix_times_vec(&mat, &r.alpha);
            for (im, a) in image.iter().zip(&r.alpha) {
                if *im != (&lambda * a) {
                    return Err(Error::integrity("alpha is not a lambda eigenvector"));
                }
            }
            // pairing normalization
            let pairing = r.alpha_at(&r.alpha_check);
            if pairing != Scalar::from_int(2) {
                return Err(Error::integrity("(alpha_check, alpha) != 2"));
            }
            r.lambda = lambda;
        }

        let elements = enumerate_elements(l, n);
        Ok(Group {
            l,
            n,
            reflections,
            elements,
        })
    }

    /// Parse a descriptor: `S(n)`, `Z(l)` or `G(l,1,n)`.
    pub fn parse_descriptor(s: &str) -> Result<(u32, usize)> {
        let s = s.trim();
        let inner = |prefix: &str| -> Option<&str> {
            s.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')
        };
        if let Some(body) = inner("G") {
            let parts: Vec<&str> = body.split(',').map(str::trim).collect();
            if parts.len() != 3 || parts[1] != "1" {
                return Err(Error::domain(format!(
                    "unsupported group '{s}', expected G(l,1,n)"
                )));
            }
            let l = parts[0]
                .parse()
                .map_err(|_| Error::domain("bad l in group descriptor"))?;
            let n = parts[2]
                .parse()
                .map_err(|_| Error::domain("bad n in group descriptor"))?;
            Ok((l, n))
        } else if let Some(body) = inner("S") {
            let n = body
                .parse()
                .map_err(|_| Error::domain("bad n in group descriptor"))?;
            Ok((1, n))
        } else if let Some(body) = inner("Z") {
            let l = body
                .parse()
                .map_err(|_| Error::domain("bad l in group descriptor"))?;
            Ok((l, 1))
        } else {
            Err(Error::domain(format!(
                "unrecognized group descriptor '{s}', expected S(n), Z(l) or G(l,1,n)"
            )))
        }
    }

    pub fn descriptor(&self) -> String {
        match (self.l, self.n) {
            (1, n) => format!("S({n})"),
            (l, 1) => format!("Z({l})"),
            (l, n) => format!("G({l},1,{n})"),
        }
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension of the reflection representation: `n - 1` for `S_n` acting
    /// through the sum-zero hyperplane, `n` otherwise.
    pub fn reflection_dim(&self) -> usize {
        if self.l == 1 {
            self.n - 1
        } else {
            self.n
        }
    }

    pub fn reflections(&self) -> &[Reflection] {
        &self.reflections
    }

    /// Mutable access to the reflection table, for experiments that rescale
    /// root data; Dunkl operators must be invariant under
    /// `(alpha, alpha_check) -> (c alpha, c^{-1} alpha_check)`.
    pub fn reflections_mut(&mut self) -> &mut [Reflection] {
        &mut self.reflections
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::identity(self.l, self.n)
    }

    /// One representative per conjugacy class, each the smallest element of
    /// its class in enumeration order; classes cover the whole group.
    pub fn conjugacy_class_reps(&self) -> Vec<GroupElement> {
        let index: HashMap<&GroupElement, usize> = self
            .elements
            .iter()
            .enumerate()
            .map(|(i, g)| (g, i))
            .collect();
        let mut assigned = vec![false; self.elements.len()];
        let mut reps = Vec::new();
        for (i, g) in self.elements.iter().enumerate() {
            if assigned[i] {
                continue;
            }
            reps.push(g.clone());
            for h in &self.elements {
                let conj = h.compose(g).compose(&h.inverse());
                assigned[index[&conj]] = true;
            }
        }
        reps
    }

    /// Look up the reflection index of a group element, if it is one.
    pub fn reflection_index(&self, g: &GroupElement) -> Option<usize> {
        self.reflections.iter().position(|r| &r.element == g)
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn enumerate_elements(l: u32, n: usize) -> Vec<GroupElement> {
    let mut perms = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    fn gen(n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in 0..n {
            if !cur.contains(&i) {
                cur.push(i);
                gen(n, cur, out);
                cur.pop();
            }
        }
    }
    gen(n, &mut cur, &mut perms);
    let mut out = Vec::new();
    for perm in perms {
        let total = (l as u64).pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let mut weights = Vec::with_capacity(n);
            for _ in 0..n {
                weights.push((c % u64::from(l)) as i64);
                c /= u64::from(l);
            }
            out.push(GroupElement::new(l, perm.clone(), weights));
        }
    }
    out
}

/// The conjugation-invariant parameter function `c`. The swap reflections all
/// share `k`; the diagonal reflections `s_i^m` share `c_m`.
#[derive(Clone, Debug, PartialEq)]
pub struct Params {
    pub k: Scalar,
    /// `c_1 .. c_{l-1}`.
    pub c: Vec<Scalar>,
}

impl Params {
    /// Type A: the single coupling constant `k`.
    pub fn type_a(k: Scalar) -> Params {
        Params { k, c: Vec::new() }
    }

    /// `G(l,1,n)` parameters `(k, c_1..c_{l-1})`.
    pub fn wreath(k: Scalar, c: Vec<Scalar>) -> Params {
        Params { k, c }
    }

    /// Rank one: only the diagonal parameters matter.
    pub fn rank1(c: Vec<Scalar>) -> Params {
        Params {
            k: Scalar::zero(),
            c,
        }
    }

    pub fn zero(l: u32) -> Params {
        Params {
            k: Scalar::zero(),
            c: vec![Scalar::zero(); l.saturating_sub(1) as usize],
        }
    }

    pub fn validate(&self, group: &Group) -> Result<()> {
        if self.c.len() != group.l() as usize - 1 {
            return Err(Error::domain(format!(
                "expected {} diagonal parameters for {}, got {}",
                group.l() - 1,
                group.descriptor(),
                self.c.len()
            )));
        }
        Ok(())
    }

    /// The value of `c` on a reflection.
    pub fn value(&self, r: &Reflection) -> &Scalar {
        match r.kind {
            ReflectionKind::Diagonal { m, .. } => &self.c[m as usize - 1],
            ReflectionKind::Swap { .. } => &self.k,
        }
    }
}
