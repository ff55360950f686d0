//! Integral lattices given by Gram matrices, their invariants and isomorphism tests.

mod expr;
mod iso;
mod k3;
mod slice;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::matrix::{det_int, int, IntMatrix, Matrix};
use crate::exact::normal_form::smith_normal_form;
use crate::exact::quadratic::{signature, Signature};

pub use expr::build_z;
pub use expr::normalize as expr_normalize;
pub(crate) use iso::positive_vector;
pub use iso::{decide_isomorphic, find_definite_isometry, IsoDecision};
pub use k3::{joint_eigenlattice, k3_lattice, k3_real_topological_type, minus_one_on_span, RealTopology};
pub use slice::SliceEnumerator;

const DISCRIMINANT_FORM_CAP: usize = 1 << 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZLattice {
    pub name: String,
    pub gram: IntMatrix,
}

/// Nikulin invariants of an even 2-elementary lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TwoElementary {
    pub r_plus: usize,
    pub r_minus: usize,
    pub a: usize,
    pub delta: u8,
}

impl fmt::Display for TwoElementary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.r_plus, self.r_minus, self.a, self.delta)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// Invariants used to tell lattices apart.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticeSummary {
    pub rank: usize,
    pub r_plus: usize,
    pub r_minus: usize,
    pub abs_det: String,
    pub parity: Parity,
    /// Parity of `L(1/2)` when the Gram matrix is divisible by 2.
    pub half_scale_parity: Option<Parity>,
    /// Invariant factors `> 1` of the discriminant group.
    pub discriminant: Vec<String>,
    /// Value counts of the discriminant form, see [`ZLattice::discriminant_form_values`].
    pub discriminant_form: Option<Vec<(String, usize)>>,
    /// The same for `L(1/2)`.
    pub half_scale_discriminant_form: Option<Vec<(String, usize)>>,
    pub two_elementary: Option<TwoElementary>,
}

impl ZLattice {
    pub fn new(name: impl Into<String>, gram: IntMatrix) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::DimensionMismatch("Gram matrix must be square".into()));
        }
        if !gram.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        if det_int(&gram).is_zero() {
            return Err(Error::Degenerate);
        }
        Ok(ZLattice { name: name.into(), gram })
    }

    pub fn from_rows(name: &str, rows: &[&[i64]]) -> Result<Self> {
        ZLattice::new(name, crate::exact::matrix::int_matrix(rows))
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn signature(&self) -> Signature {
        signature(&self.gram)
    }

    pub fn det(&self) -> BigInt {
        det_int(&self.gram)
    }

    pub fn ip(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        self.gram.bilinear(x, y)
    }

    pub fn norm(&self, x: &[BigInt]) -> BigInt {
        self.ip(x, x)
    }

    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| self.gram[(i, i)].is_even())
    }

    pub fn is_definite(&self) -> bool {
        let s = self.signature();
        s.pos == 0 || s.neg == 0
    }

    pub fn parity(&self) -> Parity {
        if self.is_even() {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// `L(n)`.
    pub fn scaled(&self, n: i64) -> ZLattice {
        ZLattice { name: format!("{}({})", self.name, n), gram: self.gram.scale(&int(n)) }
    }

    /// `L(1/2)` when the Gram matrix is divisible by 2.
    pub fn halved(&self) -> Option<ZLattice> {
        let two = int(2);
        if self.gram.data().iter().all(|x| x.is_multiple_of(&two)) {
            Some(ZLattice { name: format!("{}(1/2)", self.name), gram: self.gram.map(|x| x / &two) })
        } else {
            None
        }
    }

    pub fn direct_sum(&self, other: &ZLattice) -> ZLattice {
        ZLattice {
            name: format!("{}⊕{}", self.name, other.name),
            gram: Matrix::block_diag(&[self.gram.clone(), other.gram.clone()]),
        }
    }

    /// Invariant factors `> 1` of `L^∨/L`.
    pub fn discriminant_group(&self) -> Vec<BigInt> {
        smith_normal_form(&self.gram).invariants.into_iter().map(|x| x.abs()).filter(|x| !x.is_one()).collect()
    }

    /// Exponent of the discriminant group.
    pub fn discriminant_exponent(&self) -> BigInt {
        self.discriminant_group().last().cloned().unwrap_or_else(BigInt::one)
    }

    /// How often each value of the discriminant form occurs on `L^∨/L`: `q(x) mod 2`
    /// for even lattices, `b(x,x) mod 1` for odd ones. `None` above `cap` elements.
    pub fn discriminant_form_values(&self, cap: usize) -> Option<Vec<(String, usize)>> {
        let s = smith_normal_form(&self.gram);
        let gens: Vec<(BigInt, Vec<BigInt>)> = s
            .invariants
            .iter()
            .enumerate()
            .filter(|(_, d)| !d.abs().is_one())
            .map(|(i, d)| (d.abs(), s.v.col(i)))
            .collect();
        let order = gens.iter().try_fold(1usize, |acc, (d, _)| {
            let d: usize = d.try_into().ok()?;
            acc.checked_mul(d).filter(|&o| o <= cap)
        })?;
        let exp = gens.iter().fold(BigInt::one(), |acc, (d, _)| acc.lcm(d));
        let modulus = BigRational::from_integer(int(if self.is_even() { 2 } else { 1 }));
        let denom = BigRational::from_integer(&exp * &exp);
        let n = self.rank();
        let mut counts = std::collections::BTreeMap::new();
        let mut digits = vec![BigInt::zero(); gens.len()];
        for _ in 0..order {
            let mut y = vec![BigInt::zero(); n];
            for ((d, v), a) in gens.iter().zip(&digits) {
                let c = a * (&exp / d);
                for (yi, vi) in y.iter_mut().zip(v) {
                    *yi += &c * vi;
                }
            }
            let val = BigRational::from_integer(self.gram.bilinear(&y, &y)) / &denom;
            let r = &val - &modulus * (&val / &modulus).floor();
            *counts.entry(r).or_insert(0usize) += 1;
            for (a, (d, _)) in digits.iter_mut().zip(&gens) {
                *a += 1;
                if &*a < d {
                    break;
                }
                *a = BigInt::zero();
            }
        }
        Some(counts.into_iter().map(|(k, c)| (k.to_string(), c)).collect())
    }

    /// `(r+, r-, a, δ)` for an even 2-elementary lattice, `None` otherwise.
    pub fn two_elementary_invariants(&self) -> Option<TwoElementary> {
        if !self.is_even() {
            return None;
        }
        let s = smith_normal_form(&self.gram);
        let two = int(2);
        if s.invariants.iter().any(|d| !(d.abs().is_one() || d.abs() == two)) {
            return None;
        }
        let mut a = 0;
        let mut delta = 0u8;
        for (i, d) in s.invariants.iter().enumerate() {
            if d.abs() != two {
                continue;
            }
            a += 1;
            let col = s.v.col(i);
            let q = BigRational::new(self.gram.bilinear(&col, &col), int(4));
            if !q.is_integer() {
                delta = 1;
            }
        }
        let sig = self.signature();
        Some(TwoElementary { r_plus: sig.pos, r_minus: sig.neg, a, delta })
    }

    pub fn summary(&self) -> LatticeSummary {
        let sig = self.signature();
        LatticeSummary {
            rank: self.rank(),
            r_plus: sig.pos,
            r_minus: sig.neg,
            abs_det: self.det().abs().to_string(),
            parity: self.parity(),
            half_scale_parity: self.halved().map(|h| h.parity()),
            discriminant: self.discriminant_group().iter().map(|x| x.to_string()).collect(),
            discriminant_form: self.discriminant_form_values(DISCRIMINANT_FORM_CAP),
            half_scale_discriminant_form: self.halved().and_then(|h| h.discriminant_form_values(DISCRIMINANT_FORM_CAP)),
            two_elementary: self.two_elementary_invariants(),
        }
    }

    /// Reflection `s_r(x) = x - 2 (r,x)/(r,r) r` as a matrix on coordinates,
    /// `None` if `r` is not a crystallographic root.
    pub fn reflection(&self, r: &[BigInt]) -> Option<IntMatrix> {
        let rr = self.norm(r);
        if rr.is_zero() {
            return None;
        }
        let n = self.rank();
        let gr = self.gram.mul_vec(r);
        let mut m = IntMatrix::identity(n);
        for j in 0..n {
            let num: BigInt = &gr[j] * 2;
            if !num.is_multiple_of(&rr) {
                return None;
            }
            let c = num / &rr;
            for i in 0..n {
                let v = &m[(i, j)] - &c * &r[i];
                m[(i, j)] = v;
            }
        }
        Some(m)
    }
}

impl fmt::Display for ZLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

/// Whether `B` is unimodular and `B^T G_L B = G_target`.
pub fn verify_base_change(l: &ZLattice, b: &IntMatrix, target: &ZLattice) -> Result<bool> {
    if b.rows() != l.rank() || b.cols() != target.rank() {
        return Err(Error::DimensionMismatch(format!(
            "base change is {}x{}, lattices have ranks {} and {}",
            b.rows(),
            b.cols(),
            l.rank(),
            target.rank()
        )));
    }
    if !b.is_square() || !det_int(b).abs().is_one() {
        return Ok(false);
    }
    Ok(l.gram.congruent(b) == target.gram)
}

/// Negative definite Cartan-type Gram matrices: `-2` on the diagonal, `1` on edges.
pub fn root_lattice_gram(kind: char, n: usize) -> Result<IntMatrix> {
    let edges: Vec<(usize, usize)> = match kind {
        'A' if n >= 1 => (0..n - 1).map(|i| (i, i + 1)).collect(),
        'D' if n >= 4 => {
            let mut e: Vec<(usize, usize)> = (0..n - 2).map(|i| (i, i + 1)).collect();
            e.push((n - 3, n - 1));
            e
        }
        'E' if (6..=8).contains(&n) => {
            let mut e: Vec<(usize, usize)> = (0..n - 2).map(|i| (i, i + 1)).collect();
            e.push((2, n - 1));
            e
        }
        _ => return Err(Error::UnknownName(format!("{kind}{n}"))),
    };
    let mut g = IntMatrix::zeros(n, n);
    for i in 0..n {
        g[(i, i)] = int(-2);
    }
    for (i, j) in edges {
        g[(i, j)] = int(1);
        g[(j, i)] = int(1);
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d4_matches_explicit_matrix() {
        let g = root_lattice_gram('D', 4).unwrap();
        assert_eq!(
            g,
            crate::exact::matrix::int_matrix(&[&[-2, 1, 0, 0], &[1, -2, 1, 1], &[0, 1, -2, 0], &[0, 1, 0, -2]])
        );
    }

    #[test]
    fn e8_is_unimodular() {
        let e8 = ZLattice::new("E8", root_lattice_gram('E', 8).unwrap()).unwrap();
        assert!(e8.det().abs().is_one());
        assert_eq!(e8.two_elementary_invariants(), Some(TwoElementary { r_plus: 0, r_minus: 8, a: 0, delta: 0 }));
    }

    #[test]
    fn reflection_preserves_gram() {
        let l = build_z("(2)+A1^2").unwrap();
        let r = crate::exact::matrix::int_vec(&[1, -1, -1]);
        let s = l.reflection(&r).unwrap();
        assert_eq!(l.gram.congruent(&s), l.gram);
    }
}
