//! Reduction modulo `1+i`.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::f2::{F2Matrix, F2QuadraticForm, F2_MAX_DIM};
use crate::exact::matrix::{adjoint, conj_matrix, inverse_gauss, GaussMatrix};

use super::{named, GaussianLattice};

/// `q(x) = h(x,x)/2 mod 2` on `Λ/(1+i)Λ`, with polar form `Re h mod 2`.
pub fn form_mod_one_plus_i(l: &GaussianLattice) -> Result<F2QuadraticForm> {
    let n = l.rank();
    if n > F2_MAX_DIM {
        return Err(Error::DimensionMismatch(format!("rank {n} exceeds {F2_MAX_DIM}")));
    }
    let diag = (0..n).map(|i| (&l.gram[(i, i)].re / num_bigint::BigInt::from(2)).is_odd()).collect();
    let mut polar = F2Matrix::zero(n);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                polar.set(i, j, l.gram[(i, j)].re.is_odd());
            }
        }
    }
    F2QuadraticForm::new(diag, polar)
}

#[derive(Clone, Debug, Serialize)]
pub struct Reduction {
    #[serde(serialize_with = "ser_f2")]
    pub matrix: F2Matrix,
    pub fixed_dim: usize,
    pub preserves_form: bool,
}

fn ser_f2<S: serde::Serializer>(m: &F2Matrix, s: S) -> std::result::Result<S::Ok, S::Error> {
    let rows: Vec<Vec<u8>> = m.to_bools().iter().map(|r| r.iter().map(|&b| b as u8).collect()).collect();
    serde::Serialize::serialize(&rows, s)
}

/// Image of a (unitary or antiunitary) matrix in `GL(Λ/(1+i)Λ)`.
///
/// Complex conjugation is trivial modulo `1+i`, so an antiunitary `M ∘ conj`
/// reduces to the image of `M`.
pub fn reduce_mod_one_plus_i(l: &GaussianLattice, m: &GaussMatrix) -> Result<Reduction> {
    let n = l.rank();
    if m.rows() != n || m.cols() != n {
        return Err(Error::DimensionMismatch("matrix and lattice sizes differ".into()));
    }
    let q = form_mod_one_plus_i(l)?;
    let bits: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| m[(i, j)].mod_one_plus_i()).collect()).collect();
    let matrix = F2Matrix::from_bools(&bits);
    Ok(Reduction { matrix, fixed_dim: matrix.fixed_space_dim(), preserves_form: q.is_preserved_by(&matrix) })
}

/// Express `x ↦ M x̄` in the basis given by the columns of `B`: `B^{-1} M B̄`, together
/// with the lattice with Gram `B̄^T H B`.
pub fn antilinear_in_basis(
    l: &GaussianLattice,
    m: &GaussMatrix,
    b: &GaussMatrix,
) -> Result<(GaussianLattice, GaussMatrix)> {
    let b_inv = inverse_gauss(b).ok_or_else(|| Error::Invalid("basis matrix is not invertible over G".into()))?;
    let gram = adjoint(b).mul_mat(&l.gram).mul_mat(b);
    let lat = GaussianLattice::new(format!("{} (rebased)", l.name), gram)?;
    Ok((lat, b_inv.mul_mat(m).mul_mat(&conj_matrix(b))))
}

/// Reduction of an antiunitary involution of `Λ1,6` in the `E7` root basis, with the
/// quadratic form on `Λ/(1+i)Λ` in that basis.
pub fn e7_reduction(m: &GaussMatrix) -> Result<(Reduction, F2QuadraticForm)> {
    let (lat, m2) = antilinear_in_basis(&named::lambda16(), m, &named::e7_basis())?;
    Ok((reduce_mod_one_plus_i(&lat, &m2)?, form_mod_one_plus_i(&lat)?))
}
