//! Exact linear algebra over a generic field.

use std::fmt::Debug;

use num_traits::{One, Zero};

use super::poly::Rational;
use super::ratfun::RatFun;

pub trait Field: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    /// `o` must be nonzero.
    fn div(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_i64(n: i64) -> Self;
    /// Rough size used to pick sparse pivots.
    fn weight(&self) -> usize {
        1
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_i64(n: i64) -> Self {
        super::poly::int(n)
    }
    fn weight(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
    }
}

impl Field for RatFun {
    fn zero() -> Self {
        RatFun::zero()
    }
    fn one() -> Self {
        RatFun::one()
    }
    fn is_zero(&self) -> bool {
        RatFun::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_i64(n: i64) -> Self {
        RatFun::int(n)
    }
    fn weight(&self) -> usize {
        self.num().len() + self.den().len()
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<F: Field>(m: &mut [Vec<F>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len())
            .filter(|&r| !m[r][col].is_zero())
            .min_by_key(|&r| m[r][col].weight())
        else {
            continue;
        };
        m.swap(row, p);
        let inv = F::one().div(&m[row][col]);
        for c in col..ncols {
            m[row][c] = m[row][c].mul(&inv);
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..ncols {
                    if !m[row][c].is_zero() {
                        let t = m[row][c].mul(&f);
                        m[r][c] = m[r][c].sub(&t);
                    }
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Basis of the right null space of the matrix with rows `m`.
pub fn nullspace<F: Field>(m: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    let mut a: Vec<Vec<F>> = m.to_vec();
    let pivots = rref(&mut a, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![F::zero(); ncols];
            v[f] = F::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = a[r][f].neg();
            }
            v
        })
        .collect()
}

/// Solves `m·x = b`; `None` when inconsistent. Free variables are set to 0.
pub fn solve<F: Field>(m: &[Vec<F>], b: &[F]) -> Option<Vec<F>> {
    let ncols = m.first().map_or(0, |r| r.len());
    let mut a: Vec<Vec<F>> =
        m.iter().zip(b).map(|(r, x)| r.iter().cloned().chain([x.clone()]).collect()).collect();
    let pivots = rref(&mut a, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![F::zero(); ncols];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = a[r][ncols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::int;

    #[test]
    fn nullspace_of_rank_one() {
        let m = vec![vec![int(1), int(2), int(3)], vec![int(2), int(4), int(6)]];
        let ns = nullspace(&m, 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            let dot: Rational = m[0].iter().zip(&v).map(|(a, b)| a * b).sum();
            assert!(Zero::is_zero(&dot));
        }
    }

    #[test]
    fn solve_system() {
        let m = vec![vec![int(1), int(1)], vec![int(1), int(-1)]];
        assert_eq!(solve(&m, &[int(3), int(1)]), Some(vec![int(2), int(1)]));
        let sing = vec![vec![int(1), int(1)], vec![int(1), int(1)]];
        assert_eq!(solve(&sing, &[int(1), int(2)]), None);
    }
}
