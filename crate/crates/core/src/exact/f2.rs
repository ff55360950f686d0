//! Small dense matrices over `F_2` and quadratic forms on `F_2^n`.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};

/// Square matrix over `F_2`; row `i` is a bitmask (bit `j` = entry `(i, j)`). `n <= 11`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2Matrix {
    n: usize,
    rows: [u16; 11],
}

pub const F2_MAX_DIM: usize = 11;

impl F2Matrix {
    pub fn zero(n: usize) -> Self {
        assert!(n <= F2_MAX_DIM, "F2 matrices limited to dimension {F2_MAX_DIM}");
        F2Matrix { n, rows: [0; 11] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = F2Matrix::zero(n);
        for i in 0..n {
            m.rows[i] = 1 << i;
        }
        m
    }

    pub fn from_bools(rows: &[Vec<bool>]) -> Self {
        let mut m = F2Matrix::zero(rows.len());
        for (i, r) in rows.iter().enumerate() {
            for (j, &b) in r.iter().enumerate() {
                if b {
                    m.rows[i] |= 1 << j;
                }
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, b: bool) {
        if b {
            self.rows[i] |= 1 << j;
        } else {
            self.rows[i] &= !(1 << j);
        }
    }

    pub fn to_bools(&self) -> Vec<Vec<bool>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j)).collect()).collect()
    }

    pub fn mul(&self, other: &F2Matrix) -> F2Matrix {
        let mut out = F2Matrix::zero(self.n);
        for i in 0..self.n {
            let mut acc = 0u16;
            let mut r = self.rows[i];
            while r != 0 {
                let j = r.trailing_zeros() as usize;
                acc ^= other.rows[j];
                r &= r - 1;
            }
            out.rows[i] = acc;
        }
        out
    }

    /// `M x` with `x` a bitmask column vector.
    pub fn apply(&self, x: u16) -> u16 {
        let mut out = 0u16;
        for i in 0..self.n {
            if (self.rows[i] & x).count_ones() % 2 == 1 {
                out |= 1 << i;
            }
        }
        out
    }

    pub fn add(&self, other: &F2Matrix) -> F2Matrix {
        let mut out = *self;
        for i in 0..self.n {
            out.rows[i] ^= other.rows[i];
        }
        out
    }

    pub fn transpose(&self) -> F2Matrix {
        let mut out = F2Matrix::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                if self.get(i, j) {
                    out.rows[j] |= 1 << i;
                }
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut rows: Vec<u16> = self.rows[..self.n].to_vec();
        let mut rank = 0;
        for bit in 0..self.n {
            let Some(p) = (rank..rows.len()).find(|&i| rows[i] >> bit & 1 == 1) else { continue };
            rows.swap(rank, p);
            for i in 0..rows.len() {
                if i != rank && rows[i] >> bit & 1 == 1 {
                    rows[i] ^= rows[rank];
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn inverse(&self) -> Option<F2Matrix> {
        let n = self.n;
        let mut a = self.rows;
        let mut b = F2Matrix::identity(n).rows;
        for col in 0..n {
            let p = (col..n).find(|&i| a[i] >> col & 1 == 1)?;
            a.swap(col, p);
            b.swap(col, p);
            for i in 0..n {
                if i != col && a[i] >> col & 1 == 1 {
                    a[i] ^= a[col];
                    b[i] ^= b[col];
                }
            }
        }
        Some(F2Matrix { n, rows: b })
    }

    /// Dimension of `ker(M - I)`.
    pub fn fixed_space_dim(&self) -> usize {
        self.n - self.add(&F2Matrix::identity(self.n)).rank()
    }

    pub fn is_identity(&self) -> bool {
        *self == F2Matrix::identity(self.n)
    }
}

/// Quadratic form `q` on `F_2^n` given by `q(e_i)` and its polar form `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F2QuadraticForm {
    pub diag: Vec<bool>,
    /// Symmetric polar bilinear form with zero diagonal.
    pub polar: F2Matrix,
}

impl F2QuadraticForm {
    pub fn new(diag: Vec<bool>, polar: F2Matrix) -> Result<Self> {
        if diag.len() != polar.dim() {
            return Err(Error::DimensionMismatch("quadratic form sizes".into()));
        }
        if polar.transpose() != polar || (0..polar.dim()).any(|i| polar.get(i, i)) {
            return Err(Error::Invalid("polar form must be alternating".into()));
        }
        Ok(F2QuadraticForm { diag, polar })
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn eval(&self, x: u16) -> bool {
        let mut v = false;
        for i in 0..self.dim() {
            if x >> i & 1 == 0 {
                continue;
            }
            v ^= self.diag[i];
            for j in i + 1..self.dim() {
                if x >> j & 1 == 1 && self.polar.get(i, j) {
                    v ^= true;
                }
            }
        }
        v
    }

    /// Whether `g` preserves `q` (checked on basis vectors and pairs).
    pub fn is_preserved_by(&self, g: &F2Matrix) -> bool {
        let n = self.dim();
        for i in 0..n {
            if self.eval(g.apply(1 << i)) != self.diag[i] {
                return false;
            }
            for j in i + 1..n {
                if self.eval(g.apply((1 << i) | (1 << j))) != self.eval((1 << i) | (1 << j)) {
                    return false;
                }
            }
        }
        true
    }
}

/// Closure of the group generated by `gens`, failing beyond `cap` elements.
pub fn group_closure(gens: &[F2Matrix], cap: usize) -> Result<HashSet<F2Matrix>> {
    let n = gens.first().map_or(0, |g| g.dim());
    let id = F2Matrix::identity(n);
    let mut seen = HashSet::new();
    seen.insert(id);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.mul(g);
            if seen.insert(y) {
                if seen.len() > cap {
                    return Err(Error::ClosureCapExceeded(cap));
                }
                queue.push_back(y);
            }
        }
    }
    Ok(seen)
}

/// Conjugacy orbit of `x` under the group generated by the involutions `gens`.
pub fn conjugacy_orbit(x: &F2Matrix, gens: &[F2Matrix], cap: usize) -> Result<HashSet<F2Matrix>> {
    let mut seen = HashSet::new();
    seen.insert(*x);
    let mut queue = VecDeque::from([*x]);
    let invs: Vec<F2Matrix> = gens.iter().map(|g| g.inverse().expect("generator invertible")).collect();
    while let Some(y) = queue.pop_front() {
        for (g, gi) in gens.iter().zip(&invs) {
            let z = g.mul(&y).mul(gi);
            if seen.insert(z) {
                if seen.len() > cap {
                    return Err(Error::ClosureCapExceeded(cap));
                }
                queue.push_back(z);
            }
        }
    }
    Ok(seen)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_rank() {
        let m = F2Matrix::from_bools(&[vec![true, true], vec![false, true]]);
        assert_eq!(m.mul(&m.inverse().unwrap()), F2Matrix::identity(2));
        assert_eq!(m.rank(), 2);
        assert_eq!(m.fixed_space_dim(), 1);
    }

    #[test]
    fn gl2_has_order_six() {
        let a = F2Matrix::from_bools(&[vec![true, true], vec![false, true]]);
        let b = F2Matrix::from_bools(&[vec![false, true], vec![true, false]]);
        assert_eq!(group_closure(&[a, b], 100).unwrap().len(), 6);
    }
}
