//! Exact linear algebra over [`Scalar`]: incremental reduced row spaces and
//! fraction-free Gaussian elimination for rank and kernel computations.
//! Pivoting is deterministic, always taking the first usable column and row,
//! so every downstream basis and report is reproducible byte for byte.

use crate::scalar::{Rat, Scalar};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Matrix = Vec<Vec<Scalar>>;

/// Row vector times matrix.
pub fn row_times_matrix(row: &[Scalar], m: &Matrix) -> Vec<Scalar> {
    let cols = m.first().map_or(0, Vec::len);
    let mut out = vec![Scalar::zero(); cols];
    for (a, mrow) in row.iter().zip(m) {
        if a.is_zero() {
            continue;
        }
        for (o, b) in out.iter_mut().zip(mrow) {
            if !b.is_zero() {
                *o = &*o + &(a * b);
            }
        }
    }
    out
}

/// Matrix times column vector.
pub fn matrix_times_vec(m: &Matrix, v: &[Scalar]) -> Vec<Scalar> {
    m.iter()
        .map(|row| {
            let mut acc = Scalar::zero();
            for (a, b) in row.iter().zip(v) {
                if !a.is_zero() && !b.is_zero() {
                    acc = &acc + &(a * b);
                }
            }
            acc
        })
        .collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter().map(|row| row_times_matrix(row, b)).collect()
}

/// A subspace maintained as a reduced row echelon basis. Inserting a vector
/// reduces it against the current rows first, so the representation is
/// canonical for the subspace regardless of insertion order.
#[derive(Clone, Debug)]
pub struct RowSpace {
    ncols: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(ncols: usize) -> Self {
        RowSpace {
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    /// Reduce `v` to its normal form modulo the row space.
    pub fn reduce(&self, v: &mut [Scalar]) {
        assert_eq!(v.len(), self.ncols);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = &*x - &(&factor * r);
                }
            }
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Scalar::is_zero)
    }

    /// Insert a vector; returns true when it enlarged the space.
    pub fn insert(&mut self, mut v: Vec<Scalar>) -> bool {
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("nonzero pivot");
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        // back-reduce existing rows so the basis stays fully reduced
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let factor = row[p].clone();
            for (x, r) in row.iter_mut().zip(&v) {
                if !r.is_zero() {
                    *x = &*x - &(&factor * r);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    /// Column indices without a pivot, in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|c| !self.pivots.contains(c)).collect()
    }

}

/// Multiply each row by the least common multiple of its coefficient
/// denominators, producing an integral matrix that spans the same row space.
fn clear_denominators(mat: &mut Matrix) {
    for row in mat.iter_mut() {
        let mut lcm = BigInt::one();
        for s in row.iter() {
            let denoms: Vec<&Rat> = match s {
                Scalar::Rational(r) => vec![r],
                Scalar::Cyclotomic(c) => c.coeffs().iter().collect(),
            };
            for r in denoms {
                let d = r.denom();
                if !d.is_one() {
                    let g = num_integer_gcd(&lcm, d);
                    lcm = &lcm / &g * d;
                }
            }
        }
        if !lcm.is_one() {
            let f = Scalar::from_rat(Rat::from_integer(lcm));
            for s in row.iter_mut() {
                *s = &*s * &f;
            }
        }
    }
}

fn num_integer_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

/// Fraction-free (Bareiss) forward elimination. Rows are first cleared of
/// denominators; every intermediate entry is then a minor of the integral
/// matrix, and the division by the previous pivot is exact. Returns the
/// echelon matrix together with its pivot columns.
pub fn fraction_free_echelon(mut mat: Matrix) -> (Matrix, Vec<usize>) {
    clear_denominators(&mut mat);
    let rows = mat.len();
    let cols = mat.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut prev = Scalar::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(r, pr);
        let pivot = mat[r][c].clone();
        let (top, rest) = mat.split_at_mut(r + 1);
        let prow = &top[r];
        for row in rest.iter_mut() {
            if row[c].is_zero() {
                for x in row.iter_mut().skip(c) {
                    if !x.is_zero() {
                        *x = (&*x * &pivot).div(&prev).expect("exact");
                    }
                }
                continue;
            }
            let head = row[c].clone();
            for (x, p) in row.iter_mut().zip(prow).skip(c) {
                let num = &(&*x * &pivot) - &(&head * p);
                *x = num.div(&prev).expect("fraction-free division is exact");
            }
        }
        pivots.push(c);
        prev = pivot;
        r += 1;
    }
    mat.truncate(pivots.len());
    (mat, pivots)
}

pub fn rank(mat: Matrix) -> usize {
    fraction_free_echelon(mat).1.len()
}

/// Basis of the right kernel, one vector per free column, in column order.
/// Each basis vector has a 1 in its free coordinate.
pub fn kernel_basis(mat: Matrix) -> Vec<Vec<Scalar>> {
    let cols = mat.first().map_or(0, Vec::len);
    let (ech, pivots) = fraction_free_echelon(mat);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &fc in &free {
        let mut v = vec![Scalar::zero(); cols];
        v[fc] = Scalar::one();
        for (i, &pc) in pivots.iter().enumerate().rev() {
            let mut acc = Scalar::zero();
            for c in pc + 1..cols {
                if !ech[i][c].is_zero() && !v[c].is_zero() {
                    acc = &acc + &(&ech[i][c] * &v[c]);
                }
            }
            if !acc.is_zero() {
                v[pc] = -&acc.div(&ech[i][pc]).expect("pivot nonzero");
            }
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn srow(vals: &[i64]) -> Vec<Scalar> {
        vals.iter().map(|&v| Scalar::from_int(v)).collect()
    }

    #[test]
    fn row_space_insert_and_contains() {
        let mut rs = RowSpace::new(3);
        assert!(rs.insert(srow(&[1, 2, 3])));
        assert!(rs.insert(srow(&[0, 1, 1])));
        assert!(!rs.insert(srow(&[1, 3, 4])));
        assert_eq!(rs.dim(), 2);
        assert!(rs.contains(&srow(&[2, 5, 7])));
        assert!(!rs.contains(&srow(&[0, 0, 1])));
    }

    #[test]
    fn kernel_of_rank_one_matrix() {
        let mat = vec![srow(&[1, 2, 3]), srow(&[2, 4, 6])];
        let ker = kernel_basis(mat);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            let s = &(&v[0] + &(&Scalar::from_int(2) * &v[1])) + &(&Scalar::from_int(3) * &v[2]);
            assert!(s.is_zero());
        }
    }

    #[test]
    fn fraction_free_matches_rational_rank() {
        let mat = vec![
            vec![Scalar::from_rat(rat(1, 2)), Scalar::from_rat(rat(1, 3))],
            vec![Scalar::from_rat(rat(3, 2)), Scalar::from_rat(rat(5, 1))],
        ];
        assert_eq!(rank(mat), 2);
        // dependent rows drop the rank
        let mat = vec![
            vec![Scalar::from_rat(rat(1, 2)), Scalar::from_rat(rat(1, 3))],
            vec![Scalar::from_rat(rat(3, 2)), Scalar::from_rat(rat(1, 1))],
        ];
        assert_eq!(rank(mat), 1);
    }

    #[test]
    fn rank_with_cyclotomic_entries() {
        let e = Scalar::root_of_unity(3, 1);
        // second row is e times the first
        let mat = vec![
            vec![Scalar::one(), e.clone()],
            vec![e.clone(), &e * &e],
        ];
        assert_eq!(rank(mat), 1);
    }
}
