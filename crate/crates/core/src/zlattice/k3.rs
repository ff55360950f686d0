use std::fmt;

use num_rational::BigRational;
use serde::Serialize;

use super::{build_z, ZLattice};
use crate::error::{Error, Result};
use crate::exact::matrix::{int, inverse_rat, to_int_matrix, to_rat_matrix, IntMatrix, RatMatrix};
use crate::exact::normal_form::kernel_basis;

/// Topology of the real locus attached to 2-elementary invariants `(r, a, δ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RealTopology {
    Empty,
    TwoTori,
    Surfaces { genus: i64, spheres: i64 },
}

impl fmt::Display for RealTopology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealTopology::Empty => write!(f, "empty"),
            RealTopology::TwoTori => write!(f, "2S1"),
            RealTopology::Surfaces { genus, spheres } => write!(f, "S{genus} + {spheres}S0"),
        }
    }
}

pub fn k3_real_topological_type(r: i64, a: i64, delta: u8) -> RealTopology {
    match (r, a, delta) {
        (10, 10, 0) => RealTopology::Empty,
        (10, 8, 0) => RealTopology::TwoTori,
        _ => RealTopology::Surfaces { genus: (22 - r - a) / 2, spheres: (r - a) / 2 },
    }
}

/// The K3 lattice `U^3 ⊕ E8^2` (with `E8` negative definite).
pub fn k3_lattice() -> ZLattice {
    build_z("U^3+E8^2").expect("fixed expression")
}

/// Vectors `x` with `M x = λ x` for every `(M, λ)`, with the induced form.
pub fn joint_eigenlattice(l: &ZLattice, conds: &[(&IntMatrix, i64)]) -> Result<ZLattice> {
    let n = l.rank();
    let mut stacked: Option<IntMatrix> = None;
    for (m, lambda) in conds {
        if m.rows() != n || m.cols() != n {
            return Err(Error::DimensionMismatch("eigenlattice condition size".into()));
        }
        let a = m.sub_mat(&IntMatrix::identity(n).scale(&int(*lambda)));
        stacked = Some(match stacked {
            Some(s) => s.vstack(&a),
            None => a,
        });
    }
    let k = match stacked {
        Some(s) => kernel_basis(&s),
        None => IntMatrix::identity(n),
    };
    ZLattice::new(format!("{}^eig", l.name), l.gram.congruent(&k))
}

/// The isometry acting as `-1` on the span of the basis vectors `subset` and as `+1` on
/// its orthogonal complement; an error when that map is not integral.
pub fn minus_one_on_span(l: &ZLattice, subset: &[usize]) -> Result<IntMatrix> {
    let n = l.rank();
    let a = IntMatrix::identity(n).select_cols(subset);
    let g = to_rat_matrix(&l.gram);
    let ar = to_rat_matrix(&a);
    let inner = inverse_rat(&ar.transpose().mul_mat(&g).mul_mat(&ar)).ok_or(Error::Degenerate)?;
    let p = ar.mul_mat(&inner).mul_mat(&ar.transpose()).mul_mat(&g);
    let two = BigRational::from_integer(int(2));
    let u = RatMatrix::identity(n).sub_mat(&p.scale(&two));
    to_int_matrix(&u).ok_or_else(|| Error::Invalid("-1 on the span is not integral".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e8_involution_of_type_d4a1() {
        let e8 = build_z("E8").unwrap();
        // D4 on nodes 1,2,3,7 and A1 on node 5
        let u = minus_one_on_span(&e8, &[1, 2, 3, 7, 5]).unwrap();
        assert_eq!(e8.gram.congruent(&u), e8.gram);
        assert!(u.mul_mat(&u).is_identity());
        let plus = joint_eigenlattice(&e8, &[(&u, 1)]).unwrap();
        assert!(crate::zlattice::decide_isomorphic(&plus, &build_z("A1^3").unwrap()).is_isomorphic());
    }

    #[test]
    fn topology_formula() {
        assert_eq!(k3_real_topological_type(10, 10, 0), RealTopology::Empty);
        assert_eq!(k3_real_topological_type(1, 1, 1), RealTopology::Surfaces { genus: 10, spheres: 0 });
    }
}
