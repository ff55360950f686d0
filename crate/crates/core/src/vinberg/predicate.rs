//! Root filters for restricted runs.

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exact::gauss::GaussInt;
use crate::exact::matrix::GaussMatrix;
use crate::gaussian::GaussianLattice;

#[derive(Clone, Debug, Default)]
pub enum RootPredicate {
    #[default]
    None,
    /// Keep `r` iff `2R/h(R,R) ∈ Λ^∨` for `R = B r`: the reflection in `r` extends to a
    /// unitary transformation of `Λ`.
    Gaussian { lattice: GaussianLattice, basis: GaussMatrix },
}

impl RootPredicate {
    pub fn accepts(&self, r: &[BigInt], norm: &BigInt) -> Result<bool> {
        match self {
            RootPredicate::None => Ok(true),
            RootPredicate::Gaussian { lattice, basis } => {
                if r.len() != basis.cols() {
                    return Err(Error::DimensionMismatch("root length and basis".into()));
                }
                let rg: Vec<GaussInt> = r.iter().map(|x| GaussInt::from_int(x.clone())).collect();
                let big_r = basis.mul_vec(&rg);
                let hr = lattice.gram.mul_vec(&big_r);
                Ok(hr.iter().all(|z| (&z.re * 2u32).is_multiple_of(norm) && (&z.im * 2u32).is_multiple_of(norm)))
            }
        }
    }
}

/// The predicate for a fixed lattice whose basis is the columns of `basis` (inside `Λ`).
pub fn gaussian_root_predicate(lattice: &GaussianLattice, basis: &GaussMatrix) -> Result<RootPredicate> {
    if basis.rows() != lattice.rank() {
        return Err(Error::DimensionMismatch("basis rows must match the lattice rank".into()));
    }
    // the form must be real on the basis, i.e. the basis spans a real sublattice
    crate::gaussian::gram_of_basis(lattice, basis)?;
    Ok(RootPredicate::Gaussian { lattice: lattice.clone(), basis: basis.clone() })
}
