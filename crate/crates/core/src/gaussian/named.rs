//! Named Gaussian lattices, involution matrices and base changes.

use crate::exact::gauss::GaussInt;
use crate::exact::matrix::{gauss_matrix, GaussMatrix, Matrix};

use super::GaussianLattice;

pub fn lambda2() -> GaussianLattice {
    GaussianLattice { name: "Λ2".into(), gram: gauss_matrix(&[&[(-2, 0), (1, 1)], &[(1, -1), (-2, 0)]]) }
}

pub fn lambda11() -> GaussianLattice {
    GaussianLattice { name: "Λ1,1".into(), gram: gauss_matrix(&[&[(0, 0), (1, 1)], &[(1, -1), (0, 0)]]) }
}

/// Rank one lattice with `h(e, e) = k`.
pub fn rank_one(k: i64) -> GaussianLattice {
    GaussianLattice { name: format!("({k})"), gram: gauss_matrix(&[&[(k, 0)]]) }
}

pub fn sum(parts: &[GaussianLattice], name: &str) -> GaussianLattice {
    let blocks: Vec<GaussMatrix> = parts.iter().map(|p| p.gram.clone()).collect();
    GaussianLattice { name: name.into(), gram: Matrix::block_diag(&blocks) }
}

/// `Λ2 ⊕ (2)`.
pub fn lambda12() -> GaussianLattice {
    sum(&[lambda2(), rank_one(2)], "Λ1,2")
}

/// `Λ1,1 ⊕ Λ2^2`.
pub fn lambda15() -> GaussianLattice {
    sum(&[lambda11(), lambda2(), lambda2()], "Λ1,5")
}

/// `Λ2^3 ⊕ (2)`.
pub fn lambda16() -> GaussianLattice {
    sum(&[lambda2(), lambda2(), lambda2(), rank_one(2)], "Λ1,6")
}

pub fn m1() -> GaussMatrix {
    gauss_matrix(&[&[(1, 0)]])
}

pub fn m2() -> GaussMatrix {
    gauss_matrix(&[&[(0, 1), (0, 0)], &[(0, 0), (1, 0)]])
}

pub fn m2_prime() -> GaussMatrix {
    gauss_matrix(&[&[(0, 0), (1, 0)], &[(1, 0), (0, 0)]])
}

pub fn m4() -> GaussMatrix {
    let (o, l, i) = ((0, 0), (1, 0), (0, 1));
    gauss_matrix(&[&[o, o, i, o], &[o, o, o, l], &[i, o, o, o], &[o, l, o, o]])
}

pub fn m3() -> GaussMatrix {
    gauss_matrix(&[&[(-2, 1), (2, -2), (-2, -2)], &[(2, 0), (-1, 0), (0, 2)], &[(1, 3), (-2, -2), (-3, 2)]])
}

/// Unitary conjugating `ψ2` to `iψ2` on `Λ2` and `Λ1,1`.
pub fn conj_witness() -> GaussMatrix {
    gauss_matrix(&[&[(0, 0), (0, 1)], &[(1, 0), (0, 0)]])
}

/// `[[0, N], [N, 0]]`, conjugating `ψ4` to `iψ4`.
pub fn conj_witness4() -> GaussMatrix {
    let n = conj_witness();
    let mut m = GaussMatrix::zeros(4, 4);
    for a in 0..2 {
        for b in 0..2 {
            m[(a, 2 + b)] = n[(a, b)].clone();
            m[(2 + a, b)] = n[(a, b)].clone();
        }
    }
    m
}

/// Base change with `B̄^T (Λ2 ⊕ (2)) B = (-2) ⊕ Λ1,1`.
pub fn lambda12_base_change() -> GaussMatrix {
    gauss_matrix(&[&[(1, 1), (0, 1), (0, 0)], &[(1, -1), (0, 0), (1, 0)], &[(1, 0), (1, 0), (0, 1)]])
}

/// Basis of `Λ1,6` (columns) whose Gram matrix follows the `E7` diagram.
pub fn e7_basis() -> GaussMatrix {
    let rows: [[(i64, i64); 7]; 7] = [
        [(1, 0), (-1, -1), (0, 0), (0, 0), (0, 0), (0, 0), (0, 0)],
        [(0, 0), (-1, 0), (0, 0), (0, 0), (0, 0), (0, 0), (0, 0)],
        [(0, 0), (-1, -1), (1, 0), (-1, -1), (0, 0), (0, 0), (0, 0)],
        [(0, 0), (-1, 0), (0, 0), (-1, 0), (0, 0), (0, 0), (1, 0)],
        [(0, 0), (0, 0), (0, 0), (-1, -1), (1, 0), (0, 0), (0, 0)],
        [(0, 0), (0, 0), (0, 0), (-1, 0), (0, 0), (1, 0), (0, 0)],
        [(0, 0), (1, 0), (0, 0), (1, 0), (0, 0), (0, 0), (0, 0)],
    ];
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&(a, b)| GaussInt::new(a, b)).collect()).collect())
}

/// Basis (columns `e0..e6`) of the fixed lattice of `χ1` with Gram `(2) ⊕ A1^6`.
pub fn chi1_basis() -> GaussMatrix {
    let o = (0, 0);
    let l = (1, 0);
    let p = (1, 1);
    gauss_matrix(&[
        &[o, p, o, o, o, o, o],
        &[o, l, l, o, o, o, o],
        &[o, o, o, p, o, o, o],
        &[o, o, o, l, l, o, o],
        &[o, o, o, o, o, p, o],
        &[o, o, o, o, o, l, l],
        &[l, o, o, o, o, o, o],
    ])
}

/// Printed fixed bases for the block involutions, keyed like the involution registry.
pub fn printed_fixed_basis(involution: &str, lattice: &str) -> Option<GaussMatrix> {
    let m = match (involution, lattice) {
        ("psi1", "(-2)") => gauss_matrix(&[&[(1, 0)]]),
        ("ipsi1", "(-2)") => gauss_matrix(&[&[(1, 1)]]),
        ("psi2", "L2") => gauss_matrix(&[&[(1, 1), (0, 0)], &[(1, 0), (1, 0)]]),
        ("psi2", "L11") => gauss_matrix(&[&[(1, 1), (0, 0)], &[(0, 0), (1, 0)]]),
        ("psi2'", "L2") => gauss_matrix(&[&[(1, 0), (1, 1)], &[(1, 0), (1, -1)]]),
        ("psi2'", "L11") => gauss_matrix(&[&[(1, -1), (1, 0)], &[(1, 1), (1, 0)]]),
        ("psi4", "L2^2") => gauss_matrix(&[
            &[(-1, 0), (0, 1), (0, -1), (0, -1)],
            &[(0, 0), (0, 1), (0, 0), (-1, -1)],
            &[(0, -1), (1, 0), (-1, 0), (-1, 0)],
            &[(0, 0), (0, -1), (0, 0), (-1, 1)],
        ]),
        _ => return None,
    };
    Some(m)
}
