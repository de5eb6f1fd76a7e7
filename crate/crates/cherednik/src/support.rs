//! Support of the type A quotient by the singular ideal, decided two
//! independent ways, and the residue lemma oracle behind the coincidence
//! pattern characterization.
//!
//! A point lies in the support exactly when every singular vector vanishes
//! there; the closed characterization says this happens exactly when every
//! multiplicity among coincident coordinates is divisible by `n/d`, i.e. when
//! `(z-x_1)...(z-x_n)` is an `n/d`-th power. The two predicates are checked
//! against each other on randomized points.

use crate::poly::Poly;
use crate::scalar::{rat_int, Rat, Scalar};
use crate::singular::{type_a_singular, TypeAParams};
use crate::{Error, Result};
use num_traits::{One, Signed, Zero};

/// Evaluates both support predicates for one type A parameter choice.
pub struct SupportTester {
    pub params: TypeAParams,
    singular: Vec<Poly<Scalar>>,
}

impl SupportTester {
    pub fn new(params: TypeAParams) -> Self {
        let singular = type_a_singular(&params);
        SupportTester { params, singular }
    }

    /// True when every singular vector vanishes at the point.
    pub fn support_member(&self, point: &[Scalar]) -> bool {
        assert_eq!(point.len(), self.params.n, "dimension mismatch");
        self.singular
            .iter()
            .all(|f| f.evaluate(point).is_zero())
    }

    /// True when every multiplicity among coincident coordinate values is
    /// divisible by `n/d`.
    pub fn pattern_member(&self, point: &[Scalar]) -> bool {
        assert_eq!(point.len(), self.params.n, "dimension mismatch");
        let modulus = self.params.n as u32 / self.params.d;
        let mut remaining: Vec<&Scalar> = point.iter().collect();
        while let Some(first) = remaining.first().copied() {
            let count = remaining.iter().filter(|v| ***v == *first).count() as u32;
            if !count.is_multiple_of(modulus) {
                return false;
            }
            remaining.retain(|v| **v != *first);
        }
        true
    }
}

/// Residues at infinity of `a(z) z^i dz` for `i = 0..p-2`, where
/// `a(z) = prod_j (z - y_j)^{mu_j}`, together with the polynomiality of `a`.
#[derive(Clone, Debug)]
pub struct ResidueLemmaCheck {
    pub residues: Vec<Rat>,
    pub all_residues_vanish: bool,
    pub polynomial: bool,
    /// The lemma's direction: vanishing residues force polynomiality.
    pub implication_holds: bool,
}

/// Formal residue computation for the lemma hypotheses: the `y_j` must be
/// distinct, the exponent sum integral and greater than `-p`.
pub fn residue_lemma_oracle(mu: &[Rat], ys: &[Rat]) -> Result<ResidueLemmaCheck> {
    let p = ys.len();
    if p == 0 || mu.len() != p {
        return Err(Error::domain("need matching nonempty exponent and point lists"));
    }
    for (i, a) in ys.iter().enumerate() {
        for b in ys.iter().skip(i + 1) {
            if a == b {
                return Err(Error::domain("the points y_j must be distinct"));
            }
        }
    }
    let total: Rat = mu.iter().cloned().sum();
    if !total.is_integer() {
        return Err(Error::domain("the exponent sum must be an integer"));
    }
    let total_int = num_traits::ToPrimitive::to_i64(&total.to_integer())
        .ok_or_else(|| Error::domain("exponent sum out of range"))?;
    if total_int <= -(p as i64) {
        return Err(Error::domain(format!(
            "the exponent sum must exceed -p = {}",
            -(p as i64)
        )));
    }

    // expansion at infinity: a(z) z^i = z^{M+i} prod_j (1 - y_j u)^{mu_j}
    // with u = 1/z; the coefficient of z^{-1} is the u^{M+i+1} coefficient.
    let max_order = (total_int + p as i64 - 1).max(0) as u32;
    let series = scalar_binomial_series(mu, ys, max_order);
    let mut residues = Vec::new();
    for i in 0..p.saturating_sub(1) as i64 {
        let idx = total_int + i + 1;
        let res = if idx < 0 {
            Rat::zero()
        } else {
            -series[idx as usize].clone()
        };
        residues.push(res);
    }
    let all_residues_vanish = residues.iter().all(Zero::is_zero);
    let polynomial = mu.iter().all(|m| m.is_integer() && !m.is_negative());
    Ok(ResidueLemmaCheck {
        implication_holds: !all_residues_vanish || polynomial,
        residues,
        all_residues_vanish,
        polynomial,
    })
}

/// Coefficients of `prod_j (1 - y_j u)^{mu_j}` up to `u^upto`.
fn scalar_binomial_series(mu: &[Rat], ys: &[Rat], upto: u32) -> Vec<Rat> {
    let mut acc = vec![Rat::zero(); upto as usize + 1];
    acc[0] = Rat::one();
    for (m_j, y_j) in mu.iter().zip(ys) {
        let mut factor = Vec::with_capacity(upto as usize + 1);
        let mut binom = Rat::one();
        let mut ypow = Rat::one();
        for t in 0..=upto {
            factor.push(&binom * &ypow * sign(t));
            binom = binom * (m_j - rat_int(i64::from(t))) / rat_int(i64::from(t) + 1);
            ypow *= y_j;
        }
        let mut next = vec![Rat::zero(); upto as usize + 1];
        for (a, ca) in acc.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in factor.iter().enumerate().take(upto as usize + 1 - a) {
                if !cb.is_zero() {
                    next[a + b] += ca * cb;
                }
            }
        }
        acc = next;
    }
    acc
}

fn sign(t: u32) -> Rat {
    if t.is_multiple_of(2) {
        Rat::one()
    } else {
        -Rat::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn pt(vals: &[i64]) -> Vec<Scalar> {
        vals.iter().map(|&v| Scalar::from_int(v)).collect()
    }

    #[test]
    fn doubled_pairs_are_in_the_support() {
        let tester = SupportTester::new(TypeAParams::new(4, 2).unwrap());
        assert!(tester.support_member(&pt(&[1, 1, 5, 5])));
        assert!(tester.pattern_member(&pt(&[1, 1, 5, 5])));
        assert!(!tester.support_member(&pt(&[1, 2, 3, 4])));
        assert!(!tester.pattern_member(&pt(&[1, 2, 3, 4])));
        // fully coincident points are always in the support
        assert!(tester.support_member(&pt(&[7, 7, 7, 7])));
        assert!(tester.pattern_member(&pt(&[7, 7, 7, 7])));
    }

    #[test]
    fn residue_of_a_polynomial_differential_vanishes() {
        let check = residue_lemma_oracle(&[rat(1, 1), rat(1, 1)], &[rat(1, 1), rat(2, 1)]).unwrap();
        assert!(check.all_residues_vanish);
        assert!(check.polynomial);
        assert!(check.implication_holds);
    }

    #[test]
    fn half_exponents_leave_a_residue() {
        let check = residue_lemma_oracle(&[rat(1, 2), rat(1, 2)], &[rat(1, 1), rat(2, 1)]).unwrap();
        assert!(!check.polynomial);
        assert!(!check.all_residues_vanish, "residues: {:?}", check.residues);
        assert!(check.implication_holds);
    }

    #[test]
    fn hypothesis_violations_are_rejected() {
        // non-integral exponent sum
        assert!(residue_lemma_oracle(&[rat(1, 2)], &[rat(1, 1)]).is_err());
        // coincident points
        assert!(
            residue_lemma_oracle(&[rat(1, 1), rat(1, 1)], &[rat(1, 1), rat(1, 1)]).is_err()
        );
        // exponent sum too negative
        assert!(
            residue_lemma_oracle(&[rat(-1, 1), rat(-1, 1)], &[rat(1, 1), rat(2, 1)]).is_err()
        );
    }
}
