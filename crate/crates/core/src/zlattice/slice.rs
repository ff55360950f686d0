use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::enumerate::negdef_enumerate_rat;
use crate::exact::matrix::{inverse_rat, rat, to_rat_matrix, IntMatrix, Matrix};
use crate::exact::normal_form::{content, kernel_basis, solve_integer};

use super::ZLattice;

/// Enumerates `{v in L : (v,p) = c, (v,v) = k}` in a hyperbolic lattice with `(p,p) > 0`.
#[derive(Clone, Debug)]
pub struct SliceEnumerator {
    gram: IntMatrix,
    pp: BigInt,
    g: BigInt,
    v1: Vec<BigInt>,
    kernel: IntMatrix,
    kernel_gram: IntMatrix,
    o1: Vec<BigRational>,
}

impl SliceEnumerator {
    pub fn new(l: &ZLattice, p: &[BigInt]) -> Result<Self> {
        let n = l.rank();
        if p.len() != n {
            return Err(Error::DimensionMismatch("controlling vector length".into()));
        }
        let pp = l.norm(p);
        if !pp.is_positive() {
            return Err(Error::InvalidController(format!("(p,p) = {pp} is not positive")));
        }
        let sig = l.signature();
        if sig.pos != 1 {
            return Err(Error::InvalidController(format!(
                "lattice signature ({}, {}) is not hyperbolic",
                sig.pos, sig.neg
            )));
        }
        let w = l.gram.mul_vec(p);
        let g = content(&w);
        let row = Matrix::from_rows(vec![w.clone()]);
        let v1 = solve_integer(&row, std::slice::from_ref(&g)).expect("gcd is attained");
        let kernel = kernel_basis(&row);
        let kernel_gram = l.gram.congruent(&kernel);
        let gk_inv = inverse_rat(&to_rat_matrix(&kernel_gram)).ok_or(Error::Degenerate)?;
        let rhs: Vec<BigRational> = kernel.transpose().mul_vec(&l.gram.mul_vec(&v1)).iter().map(rat).collect();
        let o1 = gk_inv.mul_vec(&rhs);
        Ok(SliceEnumerator { gram: l.gram.clone(), pp, g, v1, kernel, kernel_gram, o1 })
    }

    /// gcd of the values `(v, p)`.
    pub fn step(&self) -> &BigInt {
        &self.g
    }

    pub fn p_norm(&self) -> &BigInt {
        &self.pp
    }

    /// Gram matrix of `p^⊥`, in the basis returned by [`Self::kernel`].
    pub fn kernel_gram(&self) -> &IntMatrix {
        &self.kernel_gram
    }

    pub fn kernel(&self) -> &IntMatrix {
        &self.kernel
    }

    pub fn vectors(&self, c: &BigInt, k: &BigInt) -> Result<Vec<Vec<BigInt>>> {
        if !c.is_multiple_of(&self.g) {
            return Ok(vec![]);
        }
        let t = c / &self.g;
        let tr = rat(&t);
        let offset: Vec<BigRational> = self.o1.iter().map(|x| x * &tr).collect();
        let target = rat(k) - BigRational::new(c * c, self.pp.clone());
        if target.is_positive() {
            return Ok(vec![]);
        }
        if self.kernel.cols() == 0 {
            return Ok(if target.is_zero() { vec![self.v1.iter().map(|x| x * &t).collect()] } else { vec![] });
        }
        let us = negdef_enumerate_rat(&self.kernel_gram, &target, &offset)?;
        let mut out: Vec<Vec<BigInt>> = us
            .into_iter()
            .map(|u| {
                let ku = self.kernel.mul_vec(&u);
                ku.iter().zip(&self.v1).map(|(a, b)| a + b * &t).collect()
            })
            .collect();
        debug_assert!(out.iter().all(|v| self.gram.bilinear(v, v) == *k));
        out.sort();
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::matrix::int_vec;
    use crate::zlattice::build_z;

    #[test]
    fn slices_of_odd_unimodular() {
        let l = build_z("(2)+A1^2").unwrap();
        let s = SliceEnumerator::new(&l, &int_vec(&[1, 0, 0])).unwrap();
        // (v,p) = 2a = 2, norm 2 - 2b^2 - 2c^2 = -2: b^2 + c^2 = 2
        let v = s.vectors(&BigInt::from(2), &BigInt::from(-2)).unwrap();
        assert_eq!(v.len(), 4);
    }
}
