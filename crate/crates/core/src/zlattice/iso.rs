//! Isomorphism decisions: invariant chains, Nikulin completeness and explicit isometries.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exact::enumerate::vectors_of_norm_big;
use crate::exact::matrix::{det_int, IntMatrix, Matrix};
use crate::exact::normal_form::kernel_basis;

use super::slice::SliceEnumerator;
use super::ZLattice;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoDecision {
    Isomorphic(String),
    Distinct(String),
    Unknown(String),
}

impl IsoDecision {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoDecision::Isomorphic(_))
    }

    pub fn is_distinct(&self) -> bool {
        matches!(self, IsoDecision::Distinct(_))
    }
}

const ISOMETRY_NODE_BUDGET: usize = 2_000_000;
const SPLIT_SEARCH_MAX_PRODUCT: i64 = 40;

/// Decide whether two lattices are isometric.
///
/// Isomorphism is asserted only with a proof: identical Gram matrices, Nikulin's
/// uniqueness for indefinite even 2-elementary lattices (possibly after halving
/// the form), an exhaustive isometry search for definite lattices, or an explicit
/// splitting `L = Zv ⊕ v^⊥` matched against a target of shape `(k) ⊕ N`.
pub fn decide_isomorphic(l1: &ZLattice, l2: &ZLattice) -> IsoDecision {
    let (s1, s2) = (l1.summary(), l2.summary());
    let checks: [(&str, bool); 8] = [
        ("rank", s1.rank == s2.rank),
        ("signature", (s1.r_plus, s1.r_minus) == (s2.r_plus, s2.r_minus)),
        ("|det|", s1.abs_det == s2.abs_det),
        ("parity", s1.parity == s2.parity),
        ("half-scale parity", s1.half_scale_parity == s2.half_scale_parity),
        ("discriminant group", s1.discriminant == s2.discriminant),
        ("discriminant form", s1.discriminant_form == s2.discriminant_form),
        ("half-scale discriminant form", s1.half_scale_discriminant_form == s2.half_scale_discriminant_form),
    ];
    if let Some((what, _)) = checks.iter().find(|(_, ok)| !ok) {
        return IsoDecision::Distinct(format!("{what} differs"));
    }
    if l1.gram == l2.gram {
        return IsoDecision::Isomorphic("identical Gram matrices".into());
    }
    let indefinite = s1.r_plus > 0 && s1.r_minus > 0;
    if indefinite {
        if let (Some(a), Some(b)) = (s1.two_elementary, s2.two_elementary) {
            return if a == b {
                IsoDecision::Isomorphic(format!("even 2-elementary indefinite with invariants {a}"))
            } else {
                IsoDecision::Distinct(format!("2-elementary invariants {a} vs {b}"))
            };
        }
        if let (Some(h1), Some(h2)) = (l1.halved(), l2.halved()) {
            if let (Some(a), Some(b)) = (h1.two_elementary_invariants(), h2.two_elementary_invariants()) {
                return if a == b {
                    IsoDecision::Isomorphic(format!("L(1/2) even 2-elementary indefinite with invariants {a}"))
                } else {
                    IsoDecision::Distinct(format!("L(1/2) invariants {a} vs {b}"))
                };
            }
        }
        for (src, dst) in [(l1, l2), (l2, l1)] {
            if let Some(d) = split_search(src, dst) {
                return d;
            }
        }
        return IsoDecision::Unknown("outside the decidable regime".into());
    }
    match find_definite_isometry(l1, l2, ISOMETRY_NODE_BUDGET) {
        Search::Found(_) => IsoDecision::Isomorphic("explicit isometry".into()),
        Search::None => IsoDecision::Distinct("no isometry (exhaustive search)".into()),
        Search::Budget => IsoDecision::Unknown("isometry search budget exhausted".into()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Search {
    Found(IntMatrix),
    None,
    Budget,
}

/// Search for `B` with `B^T G_src B = G_dst`, both definite of equal determinant.
///
/// The columns of `B` are images of the basis of `dst`, written in `src` coordinates.
pub fn find_definite_isometry(src: &ZLattice, dst: &ZLattice, budget: usize) -> Search {
    let n = src.rank();
    if n != dst.rank() || src.det().abs() != dst.det().abs() {
        return Search::None;
    }
    let sig = src.signature();
    let flip = sig.neg == 0;
    let g_src = if flip { src.gram.neg() } else { src.gram.clone() };
    let g_dst = if flip { dst.gram.neg() } else { dst.gram.clone() };
    if g_src.rows() == 0 {
        return Search::Found(IntMatrix::identity(0));
    }
    // order the target basis so each vector meets an earlier one when possible
    let mut order: Vec<usize> = vec![];
    let mut left: Vec<usize> = (0..n).collect();
    while !left.is_empty() {
        let pick = left.iter().position(|&i| order.iter().any(|&j| !g_dst[(i, j)].is_zero())).unwrap_or_else(|| {
            // fewest candidates first: smallest absolute norm
            let mut best = 0;
            for (k, &i) in left.iter().enumerate() {
                if g_dst[(i, i)].abs() < g_dst[(left[best], left[best])].abs() {
                    best = k;
                }
            }
            best
        });
        order.push(left.remove(pick));
    }
    let mut cands: Vec<Vec<Vec<BigInt>>> = Vec::with_capacity(n);
    for &i in &order {
        match vectors_of_norm_big(&g_src, &g_dst[(i, i)]) {
            Ok(v) => cands.push(v),
            Err(_) => return Search::None,
        }
    }
    let mut chosen: Vec<Vec<BigInt>> = vec![];
    let mut nodes = 0usize;
    let res = backtrack(&g_src, &g_dst, &order, &cands, &mut chosen, &mut nodes, budget);
    match res {
        Some(true) => {
            let mut cols = vec![vec![]; n];
            for (k, &i) in order.iter().enumerate() {
                cols[i] = chosen[k].clone();
            }
            let b = Matrix::from_cols(cols);
            debug_assert_eq!(src.gram.congruent(&b), dst.gram);
            Search::Found(b)
        }
        Some(false) => Search::None,
        None => Search::Budget,
    }
}

fn backtrack(
    g_src: &IntMatrix,
    g_dst: &IntMatrix,
    order: &[usize],
    cands: &[Vec<Vec<BigInt>>],
    chosen: &mut Vec<Vec<BigInt>>,
    nodes: &mut usize,
    budget: usize,
) -> Option<bool> {
    let k = chosen.len();
    if k == order.len() {
        let b = Matrix::from_cols(chosen.clone());
        return Some(det_int(&b).abs() == BigInt::from(1));
    }
    let i = order[k];
    let images: Vec<Vec<BigInt>> = chosen.iter().map(|c| g_src.mul_vec(c)).collect();
    for v in &cands[k] {
        // -1 is an isometry, so the first image may be taken up to sign
        if k == 0 && v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
            continue;
        }
        *nodes += 1;
        if *nodes > budget {
            return None;
        }
        let ok = (0..k).all(|t| crate::exact::matrix::dot(&images[t], v) == g_dst[(order[t], i)]);
        if !ok {
            continue;
        }
        chosen.push(v.clone());
        match backtrack(g_src, g_dst, order, cands, chosen, nodes, budget) {
            Some(true) => return Some(true),
            None => return None,
            Some(false) => {}
        }
        chosen.pop();
    }
    Some(false)
}

/// Index `i` with `G[i][i] > 0` orthogonal to all other basis vectors, the rest definite.
fn positive_split(l: &ZLattice) -> Option<(usize, ZLattice)> {
    let n = l.rank();
    let sig = l.signature();
    if sig.pos != 1 {
        return None;
    }
    let i = (0..n).find(|&i| l.gram[(i, i)].is_positive() && (0..n).all(|j| j == i || l.gram[(i, j)].is_zero()))?;
    let rest: Vec<usize> = (0..n).filter(|&j| j != i).collect();
    let n_lat = ZLattice { name: format!("{}-complement", l.name), gram: l.gram.principal(&rest) };
    Some((i, n_lat))
}

/// Look for `v in src` with `(v,v) = k`, `(v, src) ⊆ kZ` and `v^⊥ ≅ N` where `dst = (k) ⊕ N`.
fn split_search(src: &ZLattice, dst: &ZLattice) -> Option<IsoDecision> {
    let (i, target_rest) = positive_split(dst)?;
    let k = dst.gram[(i, i)].clone();
    let n = src.rank();
    let p0 = positive_vector(src)?;
    let slices = SliceEnumerator::new(src, &p0).ok()?;
    let step = slices.step().clone();
    let mut c = step.clone();
    while c <= BigInt::from(SPLIT_SEARCH_MAX_PRODUCT) {
        let vs = slices.vectors(&c, &k).ok()?;
        for v in vs {
            let gv = src.gram.mul_vec(&v);
            if !gv.iter().all(|x| x.is_multiple_of(&k)) {
                continue;
            }
            let row = Matrix::from_rows(vec![gv]);
            let kb = kernel_basis(&row);
            let comp = ZLattice { name: "v-perp".into(), gram: src.gram.congruent(&kb) };
            if comp.det().abs() != target_rest.det().abs() {
                continue;
            }
            if let Search::Found(b) = find_definite_isometry(&comp, &target_rest, ISOMETRY_NODE_BUDGET) {
                // assemble the full base change: column i is v, others are kb * b
                let kbb = kb.mul_mat(&b);
                let mut cols = vec![];
                let mut t = 0;
                for j in 0..n {
                    if j == i {
                        cols.push(v.clone());
                    } else {
                        cols.push(kbb.col(t));
                        t += 1;
                    }
                }
                let full = Matrix::from_cols(cols);
                if src.gram.congruent(&full) == dst.gram && det_int(&full).abs() == BigInt::from(1) {
                    return Some(IsoDecision::Isomorphic("explicit base change via orthogonal splitting".into()));
                }
            }
        }
        c += &step;
    }
    None
}

/// A lattice vector of positive norm supported on at most two basis vectors,
/// preferring the smallest norm found.
pub(crate) fn positive_vector(l: &ZLattice) -> Option<Vec<BigInt>> {
    let n = l.rank();
    let mut best: Option<(BigInt, Vec<BigInt>)> = None;
    let mut consider = |v: Vec<BigInt>| {
        let q = l.norm(&v);
        if q.is_positive() && best.as_ref().is_none_or(|(b, _)| q < *b) {
            best = Some((q, v));
        }
    };
    for i in 0..n {
        let mut v = vec![BigInt::zero(); n];
        v[i] = BigInt::one();
        consider(v);
    }
    for i in 0..n {
        for j in i + 1..n {
            for a in 1..=4i64 {
                for b in -4..=4i64 {
                    if b == 0 || a.gcd(&b) != 1 {
                        continue;
                    }
                    let mut v = vec![BigInt::zero(); n];
                    v[i] = BigInt::from(a);
                    v[j] = BigInt::from(b);
                    consider(v);
                }
            }
        }
    }
    best.map(|(_, v)| v).or_else(|| gram_schmidt_positive(l))
}

/// First basis vector whose Gram–Schmidt projection has positive norm, made primitive.
fn gram_schmidt_positive(l: &ZLattice) -> Option<Vec<BigInt>> {
    let n = l.rank();
    let g = l.gram.map(|x| BigRational::from_integer(x.clone()));
    let mut done: Vec<(Vec<BigRational>, BigRational)> = vec![];
    for i in 0..n {
        let mut w: Vec<BigRational> =
            (0..n).map(|j| BigRational::from_integer(BigInt::from((i == j) as i64))).collect();
        for (u, uu) in &done {
            let f = g.bilinear(&w, u) / uu;
            for (a, b) in w.iter_mut().zip(u) {
                *a -= &f * b;
            }
        }
        let mut ww = g.bilinear(&w, &w);
        if ww.is_zero() {
            // isotropic: x + t w has norm (x,x) + 2t(x,w), positive for suitable t
            let e = |j: usize| -> Vec<BigRational> {
                (0..n).map(|k| BigRational::from_integer(BigInt::from((j == k) as i64))).collect()
            };
            let hit = (0..n).map(e).find(|x| !g.bilinear(x, &w).is_zero());
            if let Some(x) = hit {
                let xw = g.bilinear(&x, &w);
                let xx = g.bilinear(&x, &x);
                let t = ((xx.abs() / (xw.abs() * BigRational::from_integer(2.into()))).floor() + BigRational::one())
                    * BigRational::from_integer(xw.signum().to_integer());
                w = x.iter().zip(&w).map(|(a, b)| a + &t * b).collect();
                ww = g.bilinear(&w, &w);
            }
        }
        if ww.is_positive() {
            let den = w.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            let v: Vec<BigInt> = w.iter().map(|x| (x * BigRational::from_integer(den.clone())).to_integer()).collect();
            let c = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
            return Some(v.into_iter().map(|x| x / &c).collect());
        }
        if !ww.is_zero() {
            done.push((w, ww));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zlattice::build_z;

    #[test]
    fn splitting_off_a_rank_one_summand() {
        let a = build_z("(4)+A1").unwrap();
        let b = build_z("(2)+A1(2)").unwrap();
        assert!(decide_isomorphic(&a, &b).is_isomorphic());
    }

    #[test]
    fn definite_isometry() {
        let a = build_z("A2").unwrap();
        let b = ZLattice::from_rows("A2'", &[&[-2, -1], &[-1, -2]]).unwrap();
        assert!(decide_isomorphic(&a, &b).is_isomorphic());
        let c = build_z("A1+A1(3)").unwrap();
        let d = ZLattice::from_rows("x", &[&[-2, 0], &[0, -6]]).unwrap();
        assert!(decide_isomorphic(&c, &d).is_isomorphic());
    }

    #[test]
    fn definite_non_isometric_same_invariants() {
        // x^2 + xy + 6y^2 and 2x^2 + xy + 3y^2: one genus, two classes
        let a = ZLattice::from_rows("a", &[&[-2, -1], &[-1, -12]]).unwrap();
        let b = ZLattice::from_rows("b", &[&[-4, -1], &[-1, -6]]).unwrap();
        assert_eq!(a.summary(), b.summary());
        assert!(decide_isomorphic(&a, &b).is_distinct());
    }
}
