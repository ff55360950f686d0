//! Antiunitary involutions `χ = M ∘ conj` and their fixed lattices.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::gauss::GaussInt;
use crate::exact::matrix::{
    adjoint, conj_matrix, gauss_from_int, inverse_gauss_over_field, to_gauss_int, to_gauss_rat, GaussMatrix, IntMatrix,
    Matrix,
};
use crate::exact::normal_form::integer_fixed_sublattice;
use crate::zlattice::{LatticeSummary, ZLattice};

use super::{from_real, named, realify_antilinear, GaussianLattice};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntiunitaryInvolution {
    pub name: String,
    pub lattice: GaussianLattice,
    pub m: GaussMatrix,
}

impl AntiunitaryInvolution {
    /// Checks `M M̄ = I` and `M̄^T H M = H̄`.
    pub fn new(name: impl Into<String>, lattice: GaussianLattice, m: GaussMatrix) -> Result<Self> {
        let n = lattice.rank();
        if m.rows() != n || m.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "involution is {}x{}, lattice has rank {n}",
                m.rows(),
                m.cols()
            )));
        }
        if !m.mul_mat(&conj_matrix(&m)).is_identity() {
            return Err(Error::NotAnInvolution("M M̄ != I".into()));
        }
        if adjoint(&m).mul_mat(&lattice.gram).mul_mat(&m) != conj_matrix(&lattice.gram) {
            return Err(Error::NotAntiunitary("M̄^T H M != H̄".into()));
        }
        Ok(AntiunitaryInvolution { name: name.into(), lattice, m })
    }

    pub fn apply(&self, x: &[GaussInt]) -> Vec<GaussInt> {
        let xc: Vec<GaussInt> = x.iter().map(|z| z.conj()).collect();
        self.m.mul_vec(&xc)
    }

    /// Matrix of `χ` on realified coordinates.
    pub fn real_matrix(&self) -> IntMatrix {
        realify_antilinear(&self.m)
    }

    /// `iχ = (iM) ∘ conj`.
    pub fn times_i(&self) -> AntiunitaryInvolution {
        let i = GaussInt::i();
        AntiunitaryInvolution { name: format!("i{}", self.name), lattice: self.lattice.clone(), m: self.m.scale(&i) }
    }

    /// `g χ g^{-1} = (g M ḡ^{-1}) ∘ conj` for a unitary `g`.
    pub fn conjugate_by(&self, g: &GaussMatrix) -> Result<AntiunitaryInvolution> {
        let gbar_inv = inverse_gauss_over_field(&conj_matrix(g)).ok_or(Error::Degenerate)?;
        let prod = to_gauss_rat(&g.mul_mat(&self.m)).mul_mat(&gbar_inv);
        let m = to_gauss_int(&prod).ok_or_else(|| Error::Invalid("conjugate is not integral".into()))?;
        Ok(AntiunitaryInvolution { name: format!("g{}g^-1", self.name), lattice: self.lattice.clone(), m })
    }
}

#[derive(Clone, Debug)]
pub struct FixedLattice {
    /// Gaussian basis vectors (columns).
    pub basis: GaussMatrix,
    /// The same basis in realified coordinates.
    pub real_basis: IntMatrix,
    pub zlat: ZLattice,
}

/// `Λ^χ` with a saturated basis in Hermite normal form (realified coordinates).
pub fn fixed_lattice(chi: &AntiunitaryInvolution) -> Result<FixedLattice> {
    let real_basis = integer_fixed_sublattice(&chi.real_matrix())?;
    let cols: Vec<Vec<GaussInt>> = real_basis.to_cols().iter().map(|c| from_real(c)).collect();
    let basis = Matrix::from_cols(cols);
    let gram = gram_of_basis(&chi.lattice, &basis)?;
    Ok(FixedLattice { basis, real_basis, zlat: ZLattice::new(format!("Λ^{}", chi.name), gram)? })
}

/// Real Gram matrix `B̄^T H B` of vectors on which `h` is real.
pub fn gram_of_basis(l: &GaussianLattice, b: &GaussMatrix) -> Result<IntMatrix> {
    let g = adjoint(b).mul_mat(&l.gram).mul_mat(b);
    if g.data().iter().any(|z| !z.im.is_zero()) {
        return Err(Error::Invalid("form is not real on the given vectors".into()));
    }
    Ok(g.map(|z| z.re.clone()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantPair {
    pub chi: LatticeSummary,
    pub ichi: LatticeSummary,
}

impl InvariantPair {
    /// Order-independent key: two involutions in the same projective class give equal keys.
    pub fn unordered(&self) -> (LatticeSummary, LatticeSummary) {
        if self.chi <= self.ichi {
            (self.chi.clone(), self.ichi.clone())
        } else {
            (self.ichi.clone(), self.chi.clone())
        }
    }
}

pub fn invariant_pair(chi: &AntiunitaryInvolution) -> Result<InvariantPair> {
    let a = fixed_lattice(chi)?;
    let b = fixed_lattice(&chi.times_i())?;
    Ok(InvariantPair { chi: a.zlat.summary(), ichi: b.zlat.summary() })
}

/// Whether the isometry `m` of `Λ^χ` (coordinates in `basis`) is the restriction of a unitary map.
pub fn extends_to_gaussian(l: &GaussianLattice, basis: &GaussMatrix, m: &IntMatrix) -> Result<bool> {
    let gram = gram_of_basis(l, basis)?;
    if m.rows() != gram.rows() || !m.is_square() {
        return Err(Error::DimensionMismatch("isometry size".into()));
    }
    if gram.congruent(m) != gram {
        return Err(Error::NotAnIsometry("M^T G M != G".into()));
    }
    let b_inv = inverse_gauss_over_field(basis).ok_or(Error::Degenerate)?;
    let t = to_gauss_rat(&basis.mul_mat(&gauss_from_int(m))).mul_mat(&b_inv);
    match to_gauss_int(&t) {
        Some(t) => Ok(l.is_unitary(&t)),
        None => Ok(false),
    }
}

/// Normalize Greek letters, primes and `i*` prefixes in involution names.
fn normalize_name(s: &str) -> String {
    let mut t = s.replace('ψ', "psi").replace('χ', "chi").replace(['′', '’'], "'").replace("i*", "i");
    t.retain(|c| !c.is_whitespace() && c != '_');
    t.replace('⊕', "+")
}

fn block(name: &str) -> Result<GaussMatrix> {
    let (times_i, base) = match name.strip_prefix('i') {
        Some(rest) if rest.starts_with("psi") => (true, rest),
        _ => (false, name),
    };
    let m = match base {
        "psi1" => named::m1(),
        "psi2" => named::m2(),
        "psi2'" => named::m2_prime(),
        "psi3" => named::m3(),
        "psi4" => named::m4(),
        _ => return Err(Error::UnknownName(name.into())),
    };
    Ok(if times_i { m.scale(&GaussInt::i()) } else { m })
}

fn expand_chi(name: &str) -> Option<&'static str> {
    Some(match name {
        "chi1" => "psi2+psi2+psi2+psi1",
        "chi2" => "psi2+psi2+psi2'+psi1",
        "chi3" => "psi2+psi2'+psi2'+psi1",
        "chi4" => "psi2'+psi2'+psi2'+psi1",
        "chi5" => "psi4+psi2+psi1",
        "chi6" => "psi4+psi3",
        _ => return None,
    })
}

fn involution_matrix(spec: &str) -> Result<GaussMatrix> {
    let s = normalize_name(spec);
    let (times_i, core) = match s.strip_prefix('i') {
        Some(rest) if rest.starts_with("chi") => (true, rest.to_string()),
        _ => (false, s.clone()),
    };
    let expanded = expand_chi(&core).map(str::to_string).unwrap_or(core);
    let blocks: Result<Vec<GaussMatrix>> = expanded.split('+').map(block).collect();
    let m = Matrix::block_diag(&blocks?);
    Ok(if times_i { m.scale(&GaussInt::i()) } else { m })
}

/// Involution given by a name (`psi2'`, `ipsi1`, `chi5`, `ichi6`) or a block sum
/// (`psi2+psi2'+psi1`) on the given lattice.
pub fn make_involution(l: &GaussianLattice, spec: &str) -> Result<AntiunitaryInvolution> {
    let m = involution_matrix(spec)?;
    AntiunitaryInvolution::new(spec.trim(), l.clone(), m)
}

/// Named involution on its default lattice.
pub fn named_involution(spec: &str) -> Result<AntiunitaryInvolution> {
    let s = normalize_name(spec);
    let core = s.trim_start_matches('i');
    let lattice = if core.starts_with("chi") {
        named::lambda16()
    } else {
        match core {
            "psi1" => named::rank_one(-2),
            "psi2" | "psi2'" => named::lambda2(),
            "psi3" => named::lambda12(),
            "psi4" => named::sum(&[named::lambda2(), named::lambda2()], "Λ2^2"),
            _ => return Err(Error::UnknownName(spec.into())),
        }
    };
    make_involution(&lattice, spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn psi1_variants() {
        let chi = named_involution("psi1").unwrap();
        let f = fixed_lattice(&chi).unwrap();
        assert_eq!(f.zlat.gram, crate::exact::matrix::int_matrix(&[&[-2]]));
        let f = fixed_lattice(&chi.times_i()).unwrap();
        assert_eq!(f.zlat.gram, crate::exact::matrix::int_matrix(&[&[-4]]));
    }

    #[test]
    fn rejects_non_involution() {
        let l = named::lambda2();
        let m = crate::exact::matrix::gauss_matrix(&[&[(1, 0), (1, 0)], &[(0, 0), (1, 0)]]);
        assert!(AntiunitaryInvolution::new("bad", l, m).is_err());
    }

    #[test]
    fn chi_names_expand() {
        for j in 1..=6 {
            let chi = named_involution(&format!("χ{j}")).unwrap();
            assert_eq!(chi.m.rows(), 7);
            assert!(named_involution(&format!("iχ{j}")).is_ok());
        }
    }
}
