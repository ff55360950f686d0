//! Roots, tetraflections, unitary groups and mirrors of Gaussian lattices.

use std::collections::{HashSet, VecDeque};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::enumerate::vectors_of_norm;
use crate::exact::gauss::GaussInt;
use crate::exact::matrix::{adjoint, GaussMatrix};
use crate::zlattice::decide_isomorphic;

use super::{from_real, named, GaussianLattice};

/// Default cap on group closures; `HYPERLAT_MAX_CLOSURE` overrides it.
pub fn max_closure() -> usize {
    std::env::var("HYPERLAT_MAX_CLOSURE").ok().and_then(|s| s.parse().ok()).unwrap_or(2_000_000)
}

/// The associate of `x` whose first nonzero coordinate has `re > 0, im >= 0`.
pub fn canonical_associate(x: &[GaussInt]) -> Vec<GaussInt> {
    match x.iter().find(|z| !z.is_zero()) {
        None => x.to_vec(),
        Some(z) => {
            let (_, u) = z.normalize_associate();
            x.iter().map(|a| &u * a).collect()
        }
    }
}

/// One representative per unit orbit of roots (`h(r,r) = -2`) of a negative definite lattice.
pub fn projective_roots(l: &GaussianLattice) -> Result<Vec<Vec<GaussInt>>> {
    let z = l.realify();
    let vs = vectors_of_norm(&z.gram, -2)?;
    let mut reps: Vec<Vec<GaussInt>> = vs.iter().map(|v| canonical_associate(&from_real(v))).collect();
    reps.sort();
    reps.dedup();
    Ok(reps)
}

/// `t_r(x) = x - (1 - i) h(r, x) / h(r, r) r` as a matrix.
pub fn tetraflection(l: &GaussianLattice, r: &[GaussInt]) -> Result<GaussMatrix> {
    let rr = l.h(r, r);
    if rr.is_zero() {
        return Err(Error::NotARoot("isotropic vector".into()));
    }
    let n = l.rank();
    let rc: Vec<GaussInt> = r.iter().map(|z| z.conj()).collect();
    let row = l.gram.transpose().mul_vec(&rc); // (r̄^T H)_k
    let one_minus_i = GaussInt::new(1, -1);
    let mut t = GaussMatrix::identity(n);
    for j in 0..n {
        for k in 0..n {
            let num = &(&one_minus_i * &r[j]) * &row[k];
            let q = num.exact_div(&rr).ok_or_else(|| Error::NotARoot("tetraflection is not integral".into()))?;
            t[(j, k)] = &t[(j, k)] - &q;
        }
    }
    Ok(t)
}

/// Closure of the matrix group generated by `gens`, failing beyond `cap` elements.
pub fn group_generated(gens: &[GaussMatrix], cap: usize) -> Result<Vec<GaussMatrix>> {
    let n = gens.first().map_or(0, |g| g.rows());
    let id = GaussMatrix::identity(n);
    let mut seen: HashSet<GaussMatrix> = HashSet::new();
    seen.insert(id.clone());
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.mul_mat(g);
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return Err(Error::ClosureCapExceeded(cap));
                }
                seen.insert(y.clone());
                out.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(out)
}

/// Divide `v` by `1+i` while the result stays integral and `h(v, v) != -2`.
pub fn primitive_gaussian_root(l: &GaussianLattice, v: &[GaussInt]) -> Result<Vec<GaussInt>> {
    let opi = GaussInt::one_plus_i();
    let mut x = v.to_vec();
    while l.norm(&x) != BigInt::from(-2) {
        let q: Option<Vec<GaussInt>> = x.iter().map(|z| z.exact_div(&opi)).collect();
        match q {
            Some(q) if !q.iter().all(|z| z.is_zero()) => x = q,
            _ => return Err(Error::NotARoot(format!("norm {} has no root on its line", l.norm(v)))),
        }
    }
    Ok(x)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MirrorKind {
    Nodal,
    Hyperelliptic,
    Other,
}

/// Kernel of a Gaussian row vector, as a unimodular completion over `Z[i]`.
fn gaussian_kernel(w: &[GaussInt]) -> GaussMatrix {
    let n = w.len();
    let mut row = w.to_vec();
    let mut u = GaussMatrix::identity(n);
    loop {
        let piv = (0..n).filter(|&j| !row[j].is_zero()).min_by_key(|&j| row[j].norm());
        let Some(p) = piv else { break };
        row.swap(0, p);
        u.swap_cols(0, p);
        let mut clean = true;
        for j in 1..n {
            if row[j].is_zero() {
                continue;
            }
            let (q, r) = row[j].div_rem_euclid(&row[0]);
            row[j] = r;
            for i in 0..n {
                let v = &u[(i, j)] - &(&q * &u[(i, 0)]);
                u[(i, j)] = v;
            }
            if !row[j].is_zero() {
                clean = false;
            }
        }
        if clean {
            break;
        }
    }
    let start = if row.iter().all(|z| z.is_zero()) { 0 } else { 1 };
    let idx: Vec<usize> = (start..n).collect();
    u.select_cols(&idx)
}

/// `r^⊥` for a root `r`, and its type when `Λ` has rank 7.
///
/// A mirror is nodal when `r^⊥ ≅ Λ2^2 ⊕ (-2) ⊕ (2)` and hyperelliptic when
/// `r^⊥ ≅ Λ2^2 ⊕ Λ1,1`, decided on the underlying `Z`-lattices.
pub fn mirror_orthocomplement(l: &GaussianLattice, r: &[GaussInt]) -> Result<(GaussianLattice, MirrorKind)> {
    if l.norm(r) != BigInt::from(-2) {
        return Err(Error::NotARoot(format!("h(r,r) = {}", l.norm(r))));
    }
    let rc: Vec<GaussInt> = r.iter().map(|z| z.conj()).collect();
    let w = l.gram.transpose().mul_vec(&rc);
    let k = gaussian_kernel(&w);
    let gram = adjoint(&k).mul_mat(&l.gram).mul_mat(&k);
    let perp = GaussianLattice::new(format!("{}^⊥", l.name), gram)?;
    let kind = if perp.rank() == 6 {
        let z = perp.realify();
        let l2 = named::lambda2();
        let nodal = named::sum(&[l2.clone(), l2.clone(), named::rank_one(-2), named::rank_one(2)], "nodal");
        let hyper = named::sum(&[l2.clone(), l2, named::lambda11()], "hyperelliptic");
        if decide_isomorphic(&z, &nodal.realify()).is_isomorphic() {
            MirrorKind::Nodal
        } else if decide_isomorphic(&z, &hyper.realify()).is_isomorphic() {
            MirrorKind::Hyperelliptic
        } else {
            MirrorKind::Other
        }
    } else {
        MirrorKind::Other
    };
    Ok((perp, kind))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tetraflection_has_order_four() {
        let l = named::lambda2();
        let r = vec![GaussInt::new(1, 0), GaussInt::new(0, 0)];
        let t = tetraflection(&l, &r).unwrap();
        assert!(l.is_unitary(&t));
        assert!(!t.pow(2).is_identity());
        assert!(t.pow(4).is_identity());
    }

    #[test]
    fn kernel_of_row() {
        let w = vec![GaussInt::new(1, 1), GaussInt::new(2, 0), GaussInt::new(0, 3)];
        let k = gaussian_kernel(&w);
        assert_eq!(k.cols(), 2);
        let row = crate::exact::matrix::Matrix::from_rows(vec![w]);
        assert!(row.mul_mat(&k).is_zero());
    }
}
