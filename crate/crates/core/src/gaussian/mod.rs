//! Hermitian lattices over the Gaussian integers.

mod expr;
mod involution;
pub mod named;
mod reduction;
mod roots;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::gauss::GaussInt;
use crate::exact::matrix::{adjoint, det_rat, is_hermitian, GaussMatrix, IntMatrix, Matrix};
use crate::zlattice::ZLattice;

pub use expr::build_gaussian;
pub use involution::{
    extends_to_gaussian, fixed_lattice, gram_of_basis, invariant_pair, make_involution, named_involution,
    AntiunitaryInvolution, FixedLattice, InvariantPair,
};
pub use reduction::{antilinear_in_basis, e7_reduction, form_mod_one_plus_i, reduce_mod_one_plus_i, Reduction};
pub use roots::{
    canonical_associate, group_generated, max_closure, mirror_orthocomplement, primitive_gaussian_root,
    projective_roots, tetraflection, MirrorKind,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussianLattice {
    pub name: String,
    pub gram: GaussMatrix,
}

impl GaussianLattice {
    /// Hermitian, nondegenerate, with every entry divisible by `1+i`.
    pub fn new(name: impl Into<String>, gram: GaussMatrix) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::DimensionMismatch("Hermitian matrix must be square".into()));
        }
        if !is_hermitian(&gram) {
            return Err(Error::NotHermitian);
        }
        let opi = GaussInt::one_plus_i();
        if gram.data().iter().any(|x| !opi.divides(x)) {
            return Err(Error::Invalid("entries must be divisible by 1+i".into()));
        }
        let l = GaussianLattice { name: name.into(), gram };
        if det_rat(&crate::exact::matrix::to_rat_matrix(&l.realify().gram)).is_zero() {
            return Err(Error::Degenerate);
        }
        Ok(l)
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    /// `h(x, y) = x̄^T H y`, conjugate-linear in the first slot.
    pub fn h(&self, x: &[GaussInt], y: &[GaussInt]) -> GaussInt {
        let xc: Vec<GaussInt> = x.iter().map(|a| a.conj()).collect();
        self.gram.bilinear(&xc, y)
    }

    pub fn norm(&self, x: &[GaussInt]) -> BigInt {
        self.h(x, x).re
    }

    /// Underlying `Z`-lattice with form `Re h` on the basis `(e_1..e_n, i e_1..i e_n)`.
    pub fn realify(&self) -> ZLattice {
        let n = self.rank();
        let mut g = IntMatrix::zeros(2 * n, 2 * n);
        for j in 0..n {
            for k in 0..n {
                let x = &self.gram[(j, k)];
                g[(j, k)] = x.re.clone();
                g[(n + j, n + k)] = x.re.clone();
                g[(j, n + k)] = -x.im.clone();
                g[(n + j, k)] = x.im.clone();
            }
        }
        ZLattice { name: format!("Re({})", self.name), gram: g }
    }

    /// Multiplication by `i` on realified coordinates.
    pub fn rho(&self) -> IntMatrix {
        let n = self.rank();
        let mut m = IntMatrix::zeros(2 * n, 2 * n);
        for j in 0..n {
            m[(n + j, j)] = BigInt::one();
            m[(j, n + j)] = -BigInt::one();
        }
        m
    }

    pub fn direct_sum(&self, other: &GaussianLattice) -> GaussianLattice {
        GaussianLattice {
            name: format!("{}⊕{}", self.name, other.name),
            gram: Matrix::block_diag(&[self.gram.clone(), other.gram.clone()]),
        }
    }

    /// Whether `x` (over `Q(i)`) lies in the dual lattice, i.e. `H x` is integral.
    pub fn in_dual(&self, x: &[crate::exact::gauss::GaussRat]) -> bool {
        let h = crate::exact::matrix::to_gauss_rat(&self.gram);
        h.mul_vec(x).iter().all(|c| c.to_gauss_int().is_some())
    }

    /// Whether `g` is unitary: `ḡ^T H g = H`.
    pub fn is_unitary(&self, g: &GaussMatrix) -> bool {
        g.rows() == self.rank() && g.is_square() && adjoint(g).mul_mat(&self.gram).mul_mat(g) == self.gram
    }
}

impl fmt::Display for GaussianLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

/// `a + ib` to realified coordinates `(a; b)`.
pub fn to_real(x: &[GaussInt]) -> Vec<BigInt> {
    let mut v: Vec<BigInt> = x.iter().map(|z| z.re.clone()).collect();
    v.extend(x.iter().map(|z| z.im.clone()));
    v
}

pub fn from_real(v: &[BigInt]) -> Vec<GaussInt> {
    let n = v.len() / 2;
    (0..n).map(|j| GaussInt { re: v[j].clone(), im: v[n + j].clone() }).collect()
}

/// Realified matrix of a `Z[i]`-linear map.
pub fn realify_linear(m: &GaussMatrix) -> IntMatrix {
    let n = m.rows();
    let mut x = IntMatrix::zeros(2 * n, 2 * n);
    for j in 0..n {
        for k in 0..n {
            let z = &m[(j, k)];
            x[(j, k)] = z.re.clone();
            x[(n + j, n + k)] = z.re.clone();
            x[(j, n + k)] = -z.im.clone();
            x[(n + j, k)] = z.im.clone();
        }
    }
    x
}

/// Realified matrix of the antilinear map `x ↦ M x̄`.
pub fn realify_antilinear(m: &GaussMatrix) -> IntMatrix {
    let n = m.rows();
    let mut x = IntMatrix::zeros(2 * n, 2 * n);
    for j in 0..n {
        for k in 0..n {
            let z = &m[(j, k)];
            x[(j, k)] = z.re.clone();
            x[(j, n + k)] = z.im.clone();
            x[(n + j, k)] = z.im.clone();
            x[(n + j, n + k)] = -z.re.clone();
        }
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn realification_of_lambda2_has_determinant_four() {
        let l = named::lambda2();
        let z = l.realify();
        assert!(z.gram.is_symmetric());
        assert_eq!(z.det(), BigInt::from(4));
        assert!(z.is_even());
    }

    #[test]
    fn rho_squares_to_minus_one_and_is_isometric() {
        let l = named::lambda11();
        let r = l.rho();
        assert_eq!(r.mul_mat(&r), IntMatrix::identity(4).neg());
        let z = l.realify();
        assert_eq!(z.gram.congruent(&r), z.gram);
    }

    #[test]
    fn hermitian_form_from_real_parts() {
        let l = named::lambda2();
        let z = l.realify();
        let x = vec![GaussInt::new(1, 2), GaussInt::new(-1, 1)];
        let y = vec![GaussInt::new(0, 1), GaussInt::new(3, -1)];
        let h = l.h(&x, &y);
        assert_eq!(h.re, z.ip(&to_real(&x), &to_real(&y)));
        let ix = l.rho().mul_vec(&to_real(&x));
        assert_eq!(h.im, z.ip(&ix, &to_real(&y)));
    }
}
