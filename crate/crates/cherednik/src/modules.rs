//! Graded quotients of the polynomial representation: submodule closures,
//! Gram (Shapovalov type) matrices and their radicals, Hilbert series, the
//! Gorenstein test and the finite-dimensionality decision.
//!
//! A quotient is stored degree by degree as a relation row space inside the
//! graded monomial basis, so quotient dimensions, normal forms and traces
//! are all plain exact linear algebra.
//!
//! For `S_n` the module theory lives on the sum-zero hyperplane: closures use
//! Dunkl directions spanning it, and quotients include the ideal generated by
//! `x_1 + ... + x_n`, which cuts the ambient ring `C[x_1..x_n]` down to the
//! polynomial representation of the reflection representation.

use crate::dunkl::{DunklContext, LowestWeight};
use crate::linalg::{kernel_basis, rank, row_times_matrix, Matrix, RowSpace};
use crate::poly::{DegreeBasis, Poly};
use crate::scalar::Scalar;
use crate::{Error, Result};

/// A graded quotient of `C[x_1..x_n]` truncated at a cutoff degree.
#[derive(Clone, Debug)]
pub struct GradedQuotient {
    nvars: usize,
    cutoff: u32,
    rel: Vec<RowSpace>,
    bases: Vec<DegreeBasis>,
    /// Lowest eigenvalue of the grading element, the `t`-shift of characters.
    pub h_shift: Scalar,
}

/// Outcome of the finite-dimensionality decision at a cutoff.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiniteDim {
    /// Some graded component vanished; the total dimension is exact because a
    /// graded quotient ring with `A_m = 0` has `A_{m'} = 0` for all `m' > m`.
    Finite(usize),
    UnknownAtCutoff,
}

impl GradedQuotient {
    fn empty(nvars: usize, cutoff: u32, h_shift: Scalar) -> Self {
        let bases: Vec<DegreeBasis> = (0..=cutoff)
            .map(|d| DegreeBasis::new(nvars, d))
            .collect();
        let rel = bases.iter().map(|b| RowSpace::new(b.len())).collect();
        GradedQuotient {
            nvars,
            cutoff,
            rel,
            bases,
            h_shift,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    pub fn basis(&self, d: u32) -> &DegreeBasis {
        &self.bases[d as usize]
    }

    pub fn relations(&self, d: u32) -> &RowSpace {
        &self.rel[d as usize]
    }

    /// Dimension of the degree `d` component of the quotient.
    pub fn dim_at(&self, d: u32) -> usize {
        self.bases[d as usize].len() - self.rel[d as usize].dim()
    }

    /// Per-degree quotient dimensions `0..=cutoff`.
    pub fn hilbert_series(&self) -> Vec<usize> {
        (0..=self.cutoff).map(|d| self.dim_at(d)).collect()
    }

    /// Monomials representing a basis of the degree `d` quotient component
    /// (the columns without a relation pivot).
    pub fn quotient_monomials(&self, d: u32) -> Vec<crate::poly::Monomial> {
        let basis = &self.bases[d as usize];
        self.rel[d as usize]
            .free_columns()
            .into_iter()
            .map(|c| basis.monomials[c].clone())
            .collect()
    }

    /// Normal form of a homogeneous vector at degree `d`.
    pub fn normal_form_vec(&self, d: u32, v: &mut [Scalar]) {
        self.rel[d as usize].reduce(v);
    }

    pub fn finite_dim_decide(&self) -> FiniteDim {
        let dims = self.hilbert_series();
        match dims.iter().position(|&d| d == 0) {
            Some(m) => FiniteDim::Finite(dims[..m].iter().sum()),
            None => FiniteDim::UnknownAtCutoff,
        }
    }

    /// Largest degree with a nonzero component, for finite quotients.
    pub fn top_degree(&self) -> Option<u32> {
        match self.finite_dim_decide() {
            FiniteDim::Finite(_) => {
                (0..=self.cutoff).rev().find(|&d| self.dim_at(d) > 0)
            }
            FiniteDim::UnknownAtCutoff => None,
        }
    }

    /// Graded Artinian Gorenstein test: the top component must be one
    /// dimensional and every multiplication pairing
    /// `A_i x A_{top-i} -> A_top` nondegenerate.
    pub fn gorenstein_check(&self) -> Result<bool> {
        let FiniteDim::Finite(_) = self.finite_dim_decide() else {
            return Err(Error::domain(
                "Gorenstein test requires a finite dimensional quotient",
            ));
        };
        let Some(top) = self.top_degree() else {
            // the zero ring: degenerate, call it non-Gorenstein
            return Ok(false);
        };
        if self.dim_at(top) != 1 {
            return Ok(false);
        }
        let top_basis = &self.bases[top as usize];
        let top_free = self.rel[top as usize].free_columns()[0];
        for i in 0..=top / 2 {
            let j = top - i;
            let left = self.quotient_monomials(i);
            let right = self.quotient_monomials(j);
            if left.len() != right.len() {
                return Ok(false);
            }
            let mut pairing = Vec::with_capacity(left.len());
            for a in &left {
                let mut row = Vec::with_capacity(right.len());
                for b in &right {
                    let prod = a.mul(b);
                    let mut v = vec![Scalar::zero(); top_basis.len()];
                    v[top_basis.index_of(&prod)] = Scalar::one();
                    self.rel[top as usize].reduce(&mut v);
                    row.push(v[top_free].clone());
                }
                pairing.push(row);
            }
            if rank(pairing) != left.len() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Smallest graded subspace containing the generators that is closed under
/// multiplication by every coordinate, the group action and every Dunkl
/// operator in the module directions, computed degree by degree up to the
/// cutoff. Generators must be homogeneous.
pub fn submodule_closure(
    ctx: &DunklContext,
    generators: &[Poly<Scalar>],
    cutoff: u32,
) -> Result<GradedQuotient> {
    let n = ctx.group().n();
    let shift = ctx.lowest_eigenvalue(LowestWeight::Trivial)?;
    let mut q = GradedQuotient::empty(n, cutoff, shift);
    for g in generators {
        if g.is_zero() {
            continue;
        }
        if !g.is_homogeneous() {
            return Err(Error::domain("closure generators must be homogeneous"));
        }
        let d = g.degree().unwrap();
        if d > cutoff {
            return Err(Error::domain(format!(
                "generator degree {d} exceeds cutoff {cutoff}"
            )));
        }
        // seed with the whole group orbit so upward propagation stays stable
        for w in ctx.group().elements() {
            let img = w.act_poly(g);
            q.rel[d as usize].insert(q.bases[d as usize].to_vec(&img));
        }
    }
    close_under_module_action(ctx, &mut q)?;
    Ok(q)
}

/// The plain ideal generated by homogeneous polynomials (coordinate
/// multiplications only, no group or Dunkl closure), for quotient-ring
/// experiments such as direct Gorenstein tests.
pub fn ideal_closure(nvars: usize, generators: &[Poly<Scalar>], cutoff: u32) -> Result<GradedQuotient> {
    let mut q = GradedQuotient::empty(nvars, cutoff, Scalar::zero());
    for g in generators {
        if g.is_zero() {
            continue;
        }
        if !g.is_homogeneous() {
            return Err(Error::domain("ideal generators must be homogeneous"));
        }
        let d = g.degree().unwrap();
        if d > cutoff {
            continue;
        }
        q.rel[d as usize].insert(q.bases[d as usize].to_vec(g));
    }
    propagate_up_to_fixpoint(&mut q);
    Ok(q)
}

fn propagate_up_once(q: &mut GradedQuotient, d: usize) -> bool {
    if q.rel[d].dim() == 0 {
        return false;
    }
    let n = q.nvars;
    let mut grew = false;
    if q.rel[d].is_full() {
        // x-multiples of everything span everything one degree up
        let count = q.bases[d + 1].len();
        for c in 0..count {
            let mut v = vec![Scalar::zero(); count];
            v[c] = Scalar::one();
            grew |= q.rel[d + 1].insert(v);
        }
        return grew;
    }
    let rows: Vec<Poly<Scalar>> = q.rel[d]
        .rows()
        .iter()
        .map(|r| q.bases[d].to_poly(r))
        .collect();
    for f in rows {
        for i in 0..n {
            let xf = f.mul(&Poly::var(n, i));
            grew |= q.rel[d + 1].insert(q.bases[d + 1].to_vec(&xf));
        }
    }
    grew
}

fn propagate_up_to_fixpoint(q: &mut GradedQuotient) {
    for d in 0..q.cutoff as usize {
        propagate_up_once(q, d);
    }
}

/// Fixpoint closure under coordinate multiplication upward and Dunkl
/// operators downward. Terminates because every pass that changes anything
/// strictly increases a bounded total dimension.
fn close_under_module_action(ctx: &DunklContext, q: &mut GradedQuotient) -> Result<()> {
    let dirs = ctx.module_directions();
    loop {
        let mut changed = false;
        for d in 0..q.cutoff as usize {
            changed |= propagate_up_once(q, d);
        }
        for d in (1..=q.cutoff as usize).rev() {
            if q.rel[d].dim() == 0 {
                continue;
            }
            let rows: Vec<Poly<Scalar>> = q.rel[d]
                .rows()
                .iter()
                .map(|r| q.bases[d].to_poly(r))
                .collect();
            for f in &rows {
                for y in &dirs {
                    let tf = ctx.apply(y, f)?;
                    if tf.is_zero() {
                        continue;
                    }
                    changed |= q.rel[d - 1].insert(q.bases[d - 1].to_vec(&tf));
                }
            }
        }
        if !changed {
            return Ok(());
        }
    }
}

/// Gram matrices `B_0 .. B_upto` of the contravariant pairing on the ambient
/// polynomial ring: `B_m[mu][nu]` is the constant term of `T^mu(x^nu)`. The
/// recursion `row_mu(B_m) = row_{mu - e_i}(B_{m-1}) . M_i^{(m)}` peels one
/// Dunkl factor per degree.
pub fn gram_matrices(ctx: &DunklContext, upto: u32) -> Result<Vec<Matrix>> {
    let n = ctx.group().n();
    let mut out: Vec<Matrix> = Vec::with_capacity(upto as usize + 1);
    out.push(vec![vec![Scalar::one()]]);
    for m in 1..=upto {
        let basis = DegreeBasis::new(n, m);
        let prev_basis = DegreeBasis::new(n, m - 1);
        let mut mat = Vec::with_capacity(basis.len());
        for mu in &basis.monomials {
            let i = mu.0.iter().position(|&e| e > 0).unwrap();
            let mut mu_prev = mu.0.clone();
            mu_prev[i] -= 1;
            let prev_row = &out[m as usize - 1][prev_basis.index_of(&crate::poly::Monomial(mu_prev))];
            let step = ctx.matrix(i, m)?;
            mat.push(row_times_matrix(prev_row, &step));
        }
        out.push(mat);
    }
    Ok(out)
}

/// The Gram matrix of one graded component.
pub fn gram_matrix(ctx: &DunklContext, m: u32) -> Result<Matrix> {
    Ok(gram_matrices(ctx, m)?.pop().unwrap())
}

/// Quotient by the per-degree radicals of the contravariant form (for `S_n`
/// together with the sum ideal), i.e. the irreducible quotient of the
/// polynomial representation truncated at the cutoff. The radical is verified
/// to be closed under coordinate multiplication, the group action and the
/// module-direction Dunkl operators; failure is an integrity error.
pub fn irreducible_quotient(ctx: &DunklContext, cutoff: u32) -> Result<GradedQuotient> {
    let n = ctx.group().n();
    let shift = ctx.lowest_eigenvalue(LowestWeight::Trivial)?;
    let mut q = GradedQuotient::empty(n, cutoff, shift);
    let grams = gram_matrices(ctx, cutoff)?;
    for d in 0..=cutoff as usize {
        for v in kernel_basis(grams[d].clone()) {
            q.rel[d].insert(v);
        }
    }
    if ctx.group().l() == 1 {
        // include the ideal generated by x_1 + ... + x_n
        let e1 = Poly::linear_form(&vec![Scalar::one(); n]);
        q.rel[1].insert(q.bases[1].to_vec(&e1));
        propagate_up_to_fixpoint(&mut q);
    }
    verify_module_closure(ctx, &q)?;
    Ok(q)
}

/// Check that the relation spaces are closed under coordinate
/// multiplications, the group action, and the module-direction Dunkl
/// operators, up to the cutoff.
pub fn verify_module_closure(ctx: &DunklContext, q: &GradedQuotient) -> Result<()> {
    let n = q.nvars;
    let dirs = ctx.module_directions();
    for d in 0..=q.cutoff as usize {
        let rows: Vec<Poly<Scalar>> = q.rel[d]
            .rows()
            .iter()
            .map(|r| q.bases[d].to_poly(r))
            .collect();
        for f in &rows {
            for g in ctx.group().elements() {
                if !q.rel[d].contains(&q.bases[d].to_vec(&g.act_poly(f))) {
                    return Err(Error::integrity(format!(
                        "relation space at degree {d} not stable under the group action"
                    )));
                }
            }
            if d < q.cutoff as usize {
                for i in 0..n {
                    let xf = f.mul(&Poly::var(n, i));
                    if !q.rel[d + 1].contains(&q.bases[d + 1].to_vec(&xf)) {
                        return Err(Error::integrity(format!(
                            "relation space at degree {d} not stable under x_{}",
                            i + 1
                        )));
                    }
                }
            }
            if d > 0 {
                for y in &dirs {
                    let tf = ctx.apply(y, f)?;
                    if !q.rel[d - 1].contains(&q.bases[d - 1].to_vec(&tf)) {
                        return Err(Error::integrity(format!(
                            "relation space at degree {d} not stable under the Dunkl operators"
                        )));
                    }
                }
            }
        }
    }
    Ok(())
}

/// True when the Gram radical maps to zero in the quotient, i.e. the kernel
/// of every graded Gram matrix is contained in the relation space. For a
/// finite dimensional quotient by a proper submodule this is exactly
/// irreducibility. Degrees whose quotient component already vanished are
/// skipped; containment is automatic there.
pub fn radical_vanishes_on(ctx: &DunklContext, q: &GradedQuotient) -> Result<bool> {
    let Some(max_needed) = (0..=q.cutoff).filter(|&d| q.dim_at(d) > 0).max() else {
        return Ok(true);
    };
    let grams = gram_matrices(ctx, max_needed)?;
    for d in 0..=max_needed {
        if q.dim_at(d) == 0 {
            continue;
        }
        for v in kernel_basis(grams[d as usize].clone()) {
            if !q.rel[d as usize].contains(&v) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{Group, Params};
    use crate::scalar::rat;

    #[test]
    fn closure_of_a_coordinate_fills_positive_degrees() {
        let group = Group::build(1, 2).unwrap();
        let ctx = DunklContext::new(&group, Params::type_a(Scalar::ratio(2, 7))).unwrap();
        let q = submodule_closure(&ctx, &[Poly::var(2, 0)], 5).unwrap();
        for d in 1..=5u32 {
            assert_eq!(q.dim_at(d), 0, "degree {d} should be all relations");
        }
    }

    #[test]
    fn empty_generators_leave_the_full_ring() {
        let group = Group::build(1, 2).unwrap();
        let ctx = DunklContext::new(&group, Params::type_a(Scalar::ratio(1, 2))).unwrap();
        let q = submodule_closure(&ctx, &[], 6).unwrap();
        assert_eq!(q.hilbert_series(), vec![1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(q.finite_dim_decide(), FiniteDim::UnknownAtCutoff);
    }

    #[test]
    fn gram_entries_in_rank_one() {
        // l = 2, degree 1: [1 - 2 c_1]
        let group = Group::build(2, 1).unwrap();
        let c1 = Scalar::ratio(4, 9);
        let ctx = DunklContext::new(&group, Params::rank1(vec![c1.clone()])).unwrap();
        let b1 = gram_matrix(&ctx, 1).unwrap();
        assert_eq!(b1[0][0], &Scalar::one() - &(&Scalar::from_int(2) * &c1));
        // c = 0 in one variable: degree m entry is m!
        let group0 = Group::build(2, 1).unwrap();
        let ctx0 = DunklContext::new(&group0, Params::rank1(vec![Scalar::zero()])).unwrap();
        for m in 0..=5u32 {
            let b = gram_matrix(&ctx0, m).unwrap();
            let mut fact = Scalar::one();
            for t in 1..=i64::from(m) {
                fact = &fact * &Scalar::from_int(t);
            }
            assert_eq!(b[0][0], fact, "degree {m}");
        }
    }

    #[test]
    fn gram_degree_zero_is_one() {
        let group = Group::build(1, 3).unwrap();
        let ctx = DunklContext::new(&group, Params::type_a(Scalar::ratio(2, 3))).unwrap();
        let b = gram_matrix(&ctx, 0).unwrap();
        assert_eq!(b, vec![vec![Scalar::one()]]);
    }

    #[test]
    fn gram_symmetric_for_real_groups() {
        let group = Group::build(2, 2).unwrap();
        let params = Params::wreath(Scalar::ratio(1, 3), vec![Scalar::ratio(2, 5)]);
        let ctx = DunklContext::new(&group, params).unwrap();
        for m in 0..=4u32 {
            let b = gram_matrix(&ctx, m).unwrap();
            for i in 0..b.len() {
                for j in 0..b.len() {
                    assert_eq!(b[i][j], b[j][i], "degree {m} entry ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn generic_parameter_radical_is_zero() {
        let group = Group::build(1, 2).unwrap();
        let ctx = DunklContext::new(&group, Params::type_a(Scalar::ratio(5, 7))).unwrap();
        let q = irreducible_quotient(&ctx, 6).unwrap();
        // with the sum ideal removed the quotient is one dimensional per degree
        assert_eq!(q.hilbert_series(), vec![1, 1, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn rank_one_resonant_radical() {
        // l = 2, c_1 = 3/2: graded dimensions (1,1,1,0,...), total 3
        let group = Group::build(2, 1).unwrap();
        let ctx = DunklContext::new(&group, Params::rank1(vec![Scalar::ratio(3, 2)])).unwrap();
        let q = irreducible_quotient(&ctx, 6).unwrap();
        assert_eq!(q.hilbert_series(), vec![1, 1, 1, 0, 0, 0, 0]);
        assert_eq!(q.finite_dim_decide(), FiniteDim::Finite(3));
    }

    #[test]
    fn type_a_smallest_case_dims() {
        // S_2 at k = 1/2: one dimensional quotient
        let group = Group::build(1, 2).unwrap();
        let ctx = DunklContext::new(&group, Params::type_a(Scalar::ratio(1, 2))).unwrap();
        let q = irreducible_quotient(&ctx, 4).unwrap();
        assert_eq!(q.hilbert_series(), vec![1, 0, 0, 0, 0]);
        assert_eq!(q.finite_dim_decide(), FiniteDim::Finite(1));
    }

    #[test]
    fn gorenstein_examples() {
        // C[x] / (x^r) is Gorenstein
        let x = Poly::var(1, 0);
        let xr = x.mul(&x).mul(&x);
        let q = ideal_closure(1, &[xr], 6).unwrap();
        assert_eq!(q.hilbert_series(), vec![1, 1, 1, 0, 0, 0, 0]);
        assert!(q.gorenstein_check().unwrap());
        // C[x,y] / (x^2, xy, y^2) has a two dimensional socle
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let gens = vec![x.mul(&x), x.mul(&y), y.mul(&y)];
        let q = ideal_closure(2, &gens, 4).unwrap();
        assert_eq!(q.hilbert_series(), vec![1, 2, 0, 0, 0]);
        assert!(!q.gorenstein_check().unwrap());
        // infinite dimensional input is a precondition error
        let q = ideal_closure(2, &[], 3).unwrap();
        assert!(q.gorenstein_check().is_err());
    }

    #[test]
    fn full_ring_is_unknown_at_cutoff() {
        let q = ideal_closure(2, &[], 8).unwrap();
        assert_eq!(q.finite_dim_decide(), FiniteDim::UnknownAtCutoff);
    }

    #[test]
    fn contravariance_links_adjacent_gram_matrices() {
        // B(x_i f, g) = B(f, T_i g): every route through the recursion gives
        // the same row, whichever variable is peeled off
        let group = Group::build(2, 2).unwrap();
        let params = Params::wreath(Scalar::ratio(1, 2), vec![Scalar::ratio(2, 3)]);
        let ctx = DunklContext::new(&group, params).unwrap();
        let grams = gram_matrices(&ctx, 5).unwrap();
        for m in 1..=5u32 {
            let basis = crate::poly::DegreeBasis::new(2, m);
            let prev = crate::poly::DegreeBasis::new(2, m - 1);
            for (row_idx, mu) in basis.monomials.iter().enumerate() {
                for i in 0..2 {
                    if mu.0[i] == 0 {
                        continue;
                    }
                    let mut mp = mu.0.clone();
                    mp[i] -= 1;
                    let prev_row =
                        &grams[m as usize - 1][prev.index_of(&crate::poly::Monomial(mp))];
                    let step = ctx.matrix(i, m).unwrap();
                    let via_i = crate::linalg::row_times_matrix(prev_row, &step);
                    assert_eq!(via_i, grams[m as usize][row_idx], "degree {m} route {i}");
                }
            }
        }
    }

    #[test]
    fn gram_form_is_group_invariant_for_real_groups() {
        // B(g a, g b) = B(a, b): conjugating the Gram matrix by the monomial
        // action of any element leaves it unchanged
        let group = Group::build(2, 2).unwrap();
        let params = Params::wreath(Scalar::ratio(1, 3), vec![Scalar::ratio(1, 2)]);
        let ctx = DunklContext::new(&group, params).unwrap();
        for m in 0..=4u32 {
            let basis = crate::poly::DegreeBasis::new(2, m);
            let b = gram_matrix(&ctx, m).unwrap();
            for g in group.elements() {
                // action matrix on the degree-m component
                let mut act = vec![vec![Scalar::zero(); basis.len()]; basis.len()];
                for (j, mon) in basis.monomials.iter().enumerate() {
                    let image = g.act_poly(&Poly::monomial(2, mon.clone(), Scalar::one()));
                    for (im, c) in image.terms() {
                        act[basis.index_of(im)][j] = c.clone();
                    }
                }
                // compare act^T B act with B
                let gb = crate::linalg::mat_mul(&act, &b);
                let mut lhs = vec![vec![Scalar::zero(); basis.len()]; basis.len()];
                for r in 0..basis.len() {
                    for c2 in 0..basis.len() {
                        let mut acc = Scalar::zero();
                        for t in 0..basis.len() {
                            acc = &acc + &(&act[t][r] * &gb[t][c2]);
                        }
                        lhs[r][c2] = acc;
                    }
                }
                assert_eq!(lhs, b, "degree {m}, element {g}");
            }
        }
    }

    #[test]
    fn type_a_with_common_divisor_stays_infinite() {
        // (n, r) = (4, 2): the quotient has positive dimensions at every
        // degree, whatever the cutoff
        let group = Group::build(1, 4).unwrap();
        let ctx = DunklContext::new(&group, Params::type_a(Scalar::ratio(2, 4))).unwrap();
        let mut gens =
            crate::singular::type_a_singular(&crate::singular::TypeAParams::new(4, 2).unwrap());
        gens.push(Poly::linear_form(&vec![Scalar::one(); 4]));
        let q = submodule_closure(&ctx, &gens, 10).unwrap();
        assert_eq!(q.finite_dim_decide(), FiniteDim::UnknownAtCutoff);
        assert!(q.hilbert_series().iter().all(|&d| d > 0));
    }

    #[test]
    fn lowest_shift_matches_type_a_value() {
        let group = Group::build(1, 3).unwrap();
        let ctx = DunklContext::new(&group, Params::type_a(Scalar::ratio(2, 3))).unwrap();
        let q = submodule_closure(&ctx, &[], 2).unwrap();
        assert_eq!(q.h_shift, Scalar::from_rat(rat(-1, 1)));
    }
}
