//! The rank one case `W = Z/lZ`: closed-form multiplicities and characters
//! of the irreducible quotients `L_c(eta^p)`, cross-checked by a brute-force
//! Gram computation in the one-variable twisted module.
//!
//! With `f_c(z) = sum_j 2 c_j z^j / (1 - e^{-j})`, the lowest eigenvalue on
//! `M_c(eta^p)` is `1/2 - f_c(e^p)`, and `L_c(eta^m)` occurs in `M_c(eta^p)`
//! exactly when `f_c(e^p) - f_c(e^m)` is a positive integer congruent to
//! `p - m` modulo `l`.
//!
//! The brute force applies the twisted Dunkl operator directly: on
//! `x^t ⊗ eta^p` it acts by the scalar
//! `a_t = t - sum_j w_j (1 - e^{j(p-t)})` with `w_j = 2 c_j / (1 - e^{-j})`,
//! so the degree-t Gram entry is `a_1 a_2 ... a_t` and the radical starts at
//! the first vanishing `a_t`.

use crate::characters::CharacterSeries;
use crate::scalar::Scalar;
use crate::series::TruncSeries;
use crate::{Error, Result};
use num_traits::{Signed, ToPrimitive};

/// Rank one parameters `(c_1, ..., c_{l-1})`.
#[derive(Clone, Debug)]
pub struct Rank1 {
    pub l: u32,
    pub c: Vec<Scalar>,
    /// `w_j = 2 c_j / (1 - e^{-j})`, `j = 1..l-1`.
    weights: Vec<Scalar>,
}

impl Rank1 {
    pub fn new(l: u32, c: Vec<Scalar>) -> Result<Self> {
        if l < 2 {
            return Err(Error::domain("rank one needs l >= 2"));
        }
        if c.len() != (l - 1) as usize {
            return Err(Error::domain(format!(
                "expected {} parameters, got {}",
                l - 1,
                c.len()
            )));
        }
        let weights = c
            .iter()
            .enumerate()
            .map(|(idx, cj)| {
                let j = idx as i64 + 1;
                let den = &Scalar::one() - &Scalar::root_of_unity(l, -j);
                (&Scalar::from_int(2) * cj).div(&den)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Rank1 { l, c, weights })
    }

    /// `f_c(e^power)`.
    pub fn f_at(&self, power: i64) -> Scalar {
        let mut acc = Scalar::zero();
        for (idx, w) in self.weights.iter().enumerate() {
            let j = idx as i64 + 1;
            acc = &acc + &(w * &Scalar::root_of_unity(self.l, power * j));
        }
        acc
    }

    /// Lowest eigenvalue of the grading element on `M_c(eta^p)`.
    pub fn lowest_eigenvalue(&self, p: u32) -> Scalar {
        &Scalar::ratio(1, 2) - &self.f_at(i64::from(p))
    }

    /// `f_c(e^p) - f_c(e^m)` when it is a positive integer congruent to
    /// `p - m` modulo `l`.
    pub fn b_value(&self, p: u32, m: u32) -> Option<u64> {
        let diff = &self.f_at(i64::from(p)) - &self.f_at(i64::from(m));
        let r = diff.as_rational()?;
        if !r.is_integer() || !r.is_positive() {
            return None;
        }
        let b = r.to_integer().to_u64()?;
        let congruent = (i64::from(p) - i64::from(m)).rem_euclid(i64::from(self.l)) as u64;
        if b % u64::from(self.l) == congruent % u64::from(self.l) {
            Some(b)
        } else {
            None
        }
    }

    /// Multiplicity of `L_c(eta^m)` in `M_c(eta^p)` for `m != p` (mod l).
    pub fn multiplicity(&self, p: u32, m: u32) -> u8 {
        u8::from(self.b_value(p, m).is_some())
    }

    /// Smallest positive integer of the form `f_c(e^p) - f_c(e^m)` congruent
    /// to `p - m` modulo `l`; the degree of the first singular vector in
    /// `M_c(eta^p)`.
    pub fn smallest_b(&self, p: u32) -> Option<u64> {
        (0..self.l)
            .filter_map(|m| self.b_value(p, m))
            .min()
    }

    /// Closed-form character of `L_c(eta^p)` against `g = s^j`:
    /// `e^{pj} t^{h} (1 - t^b e^{-bj}) / (1 - t e^{-j})` when a singular
    /// degree `b` exists, the full standard character otherwise.
    pub fn closed_character(&self, p: u32, j: i64, upto: usize) -> Result<CharacterSeries> {
        let h = self.lowest_eigenvalue(p);
        let front = Scalar::root_of_unity(self.l, i64::from(p) * j);
        let mut den = vec![Scalar::one(), -&Scalar::root_of_unity(self.l, -j)];
        den.truncate(upto + 2);
        let denominator = TruncSeries::from_poly(&den, upto).inverse()?;
        let series = match self.smallest_b(p) {
            Some(b) => {
                let mut num = vec![Scalar::zero(); (b as usize + 1).min(upto + 1)];
                num[0] = Scalar::one();
                if (b as usize) <= upto {
                    num[b as usize] =
                        -&Scalar::root_of_unity(self.l, -(b as i64) * j);
                }
                TruncSeries::from_poly(&num, upto).mul(&denominator)
            }
            None => denominator,
        };
        Ok(CharacterSeries {
            shift: h,
            coeffs: series.scale(&front).coeffs,
        })
    }

    /// The twisted Dunkl scalars `a_1 .. a_upto` on `M_c(eta^p)`, computed
    /// directly from the operator: the divided-difference term acts on the
    /// polynomial factor while `s^j` also scales the lowest weight line, so
    /// `a_t = t - sum_j w_j e^{jp} (1 - e^{-jt})`.
    pub fn gram_sequence(&self, p: u32, upto: u32) -> Vec<Scalar> {
        (1..=i64::from(upto))
            .map(|t| {
                let mut a = Scalar::from_int(t);
                for (idx, w) in self.weights.iter().enumerate() {
                    let j = idx as i64 + 1;
                    let lowest = Scalar::root_of_unity(self.l, j * i64::from(p));
                    let dd = &Scalar::one() - &Scalar::root_of_unity(self.l, -j * t);
                    a = &a - &(&(w * &lowest) * &dd);
                }
                a
            })
            .collect()
    }

    /// Graded dimensions of `L_c(eta^p)` up to the cutoff, by brute force:
    /// the radical starts at the first vanishing twisted Gram scalar.
    pub fn brute_dims(&self, p: u32, upto: u32) -> Vec<usize> {
        let seq = self.gram_sequence(p, upto);
        let first_zero = seq.iter().position(Scalar::is_zero);
        (0..=upto as usize)
            .map(|t| match first_zero {
                Some(b) if t > b => 0,
                _ => 1,
            })
            .collect()
    }

    /// Brute-force character of `L_c(eta^p)` against `s^j`: the trace of
    /// `s^j` on the surviving monomials `x^t`, `t` below the first radical
    /// degree, each an eigenvector with eigenvalue `e^{(p-t)j}`.
    pub fn brute_character(&self, p: u32, j: i64, upto: usize) -> CharacterSeries {
        let dims = self.brute_dims(p, upto as u32);
        let coeffs = dims
            .iter()
            .enumerate()
            .map(|(t, &dim)| {
                if dim == 0 {
                    Scalar::zero()
                } else {
                    Scalar::root_of_unity(self.l, (i64::from(p) - t as i64) * j)
                }
            })
            .collect();
        CharacterSeries {
            shift: self.lowest_eigenvalue(p),
            coeffs,
        }
    }

    /// Brute-force multiplicity of `L_c(eta^m)` in `M_c(eta^p)`: scan the
    /// vanishing Gram scalars and count those whose submodule has lowest
    /// weight `eta^m`. Distinct vanishing degrees always induce distinct
    /// lowest weights, so the count is 0 or 1.
    pub fn brute_multiplicity(&self, p: u32, m: u32, cutoff: u32) -> u8 {
        let seq = self.gram_sequence(p, cutoff);
        let mut count = 0u8;
        for (idx, a) in seq.iter().enumerate() {
            let b = idx as i64 + 1;
            if a.is_zero() && (i64::from(p) - b).rem_euclid(i64::from(self.l)) == i64::from(m) {
                count += 1;
            }
        }
        count
    }
}

/// Search over resonant rank one parameters for a quotient that is finite
/// dimensional and Gorenstein yet reducible: parameters where the twisted
/// Gram sequence on `M_c` vanishes at two degrees `b1 < b2`. The quotient by
/// the degree `b2` singular vector is then `C[x]/(x^{b2})`, a Gorenstein
/// ring, while the radical already starts at `b1`. Needs `l >= 3`: two
/// independent diagonal parameters.
pub fn find_gorenstein_reducible(l: u32, max_degree: u32) -> Option<(Rank1, u64, u64)> {
    if l < 3 {
        return None;
    }
    for b2 in 2..=u64::from(max_degree) {
        for b1 in 1..b2 {
            if b1 % u64::from(l) == 0 || b2 % u64::from(l) == 0 {
                continue;
            }
            if b1 % u64::from(l) == b2 % u64::from(l) {
                continue;
            }
            let Some(r1) = solve_two_resonances(l, b1, b2) else {
                continue;
            };
            let seq = r1.gram_sequence(0, max_degree);
            let zeros: Vec<u64> = seq
                .iter()
                .enumerate()
                .filter(|(_, a)| a.is_zero())
                .map(|(i, _)| i as u64 + 1)
                .collect();
            if zeros.first() == Some(&b1) && zeros.contains(&b2) {
                return Some((r1, b1, b2));
            }
        }
    }
    None
}

/// Solve the 2x2 linear system making the trivial module resonant at both
/// degrees: `f_c(1) - f_c(e^{-b}) = b` for `b = b1, b2`, in the first two
/// diagonal parameters (any further ones are set to zero).
fn solve_two_resonances(l: u32, b1: u64, b2: u64) -> Option<Rank1> {
    let coeff = |j: i64, b: u64| -> Scalar {
        // coefficient of c_j: 2 (1 - e^{-j b}) / (1 - e^{-j})
        let num = &Scalar::one() - &Scalar::root_of_unity(l, -j * b as i64);
        let den = &Scalar::one() - &Scalar::root_of_unity(l, -j);
        (&Scalar::from_int(2) * &num).div(&den).unwrap()
    };
    let a11 = coeff(1, b1);
    let a12 = coeff(2, b1);
    let a21 = coeff(1, b2);
    let a22 = coeff(2, b2);
    let det = &(&a11 * &a22) - &(&a12 * &a21);
    if det.is_zero() {
        return None;
    }
    let rhs1 = Scalar::from_int(b1 as i64);
    let rhs2 = Scalar::from_int(b2 as i64);
    let c1 = (&(&rhs1 * &a22) - &(&rhs2 * &a12)).div(&det).unwrap();
    let c2 = (&(&rhs2 * &a11) - &(&rhs1 * &a21)).div(&det).unwrap();
    let mut c = vec![c1, c2];
    c.resize((l - 1) as usize, Scalar::zero());
    Rank1::new(l, c).ok()
}
