//! Vinberg's algorithm for hyperbolic lattices of signature `(1, n)`.
//!
//! Heights follow the tabulated convention `(r,p)^2 / -(r,r)`; the distance-based
//! value `-2(r,p)^2/(r,r)` is twice that and is reported alongside.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::coxeter::{diagram_from_roots, finite_volume, Census, CoxeterDiagram};
use crate::error::{Error, Result};
use crate::exact::matrix::{IntMatrix, Matrix};
use crate::exact::normal_form::content;
use crate::zlattice::{SliceEnumerator, ZLattice};

mod predicate;

pub use predicate::{gaussian_root_predicate, RootPredicate};

/// Whether `r` is a root of `L`: `2(r,x) ∈ (r,r)Z` for all `x`. Requires `(r,r) < 0`, `r` primitive.
pub fn crystallographic_check(l: &ZLattice, r: &[BigInt]) -> Result<bool> {
    if r.len() != l.rank() {
        return Err(Error::DimensionMismatch("vector length".into()));
    }
    if !content(r).is_one() {
        return Err(Error::NotPrimitive);
    }
    let k = l.norm(r);
    if !k.is_negative() {
        return Err(Error::NotARoot(format!("norm {k} is not negative")));
    }
    Ok(is_crystallographic(&l.gram, r, &k))
}

fn is_crystallographic(gram: &IntMatrix, r: &[BigInt], k: &BigInt) -> bool {
    gram.mul_vec(r).iter().all(|x| (x * 2u32).is_multiple_of(k))
}

/// Even `k` dividing `2·exp(A_L)`; for even lattices these bound the possible root norms `-k`.
pub fn default_allowed_norms(l: &ZLattice) -> Vec<u64> {
    let e = l.discriminant_exponent();
    let two_e: u64 = (e * 2u32).try_into().unwrap_or(u64::MAX);
    let cap = two_e.min(1 << 20);
    (1..=cap).filter(|k| k % 2 == 0 && two_e.is_multiple_of(*k)).collect()
}

#[derive(Clone, Debug)]
pub struct VinbergConfig {
    pub lattice: ZLattice,
    pub controller: Vec<BigInt>,
    /// Positive `k`; roots of norm `-k` are considered.
    pub allowed_norms: Vec<u64>,
    pub predicate: RootPredicate,
    /// Stop with [`Status::HeightCapped`] before any level above this height.
    pub max_height: Option<BigRational>,
    /// Coordinates `T v` used for the lexicographic order (identity when `None`).
    pub frame: Option<IntMatrix>,
}

impl VinbergConfig {
    /// Defaults: the smallest positive vector among basis vectors and small two-term
    /// combinations, and [`default_allowed_norms`].
    pub fn new(lattice: ZLattice) -> Result<Self> {
        let controller = crate::zlattice::positive_vector(&lattice)
            .ok_or_else(|| Error::InvalidController("no small positive vector found".into()))?;
        let allowed_norms = default_allowed_norms(&lattice);
        Ok(VinbergConfig {
            lattice,
            controller,
            allowed_norms,
            predicate: RootPredicate::None,
            max_height: None,
            frame: None,
        })
    }

    pub fn with_controller(mut self, p: Vec<BigInt>) -> Self {
        self.controller = p;
        self
    }

    pub fn with_norms(mut self, norms: Vec<u64>) -> Self {
        self.allowed_norms = norms;
        self
    }

    pub fn with_predicate(mut self, p: RootPredicate) -> Self {
        self.predicate = p;
        self
    }

    pub fn with_max_height(mut self, h: BigRational) -> Self {
        self.max_height = Some(h);
        self
    }

    pub fn with_frame(mut self, t: IntMatrix) -> Self {
        self.frame = Some(t);
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    Finished,
    HeightCapped,
    Running,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AcceptedRoot {
    pub vector: Vec<BigInt>,
    pub norm: BigInt,
    /// `(r, p)`.
    pub product: BigInt,
    /// `(r,p)^2 / -(r,r)`.
    pub height: BigRational,
}

impl AcceptedRoot {
    /// `-2(r,p)^2/(r,r)`.
    pub fn distance_height(&self) -> BigRational {
        &self.height * BigRational::from_integer(2.into())
    }
}

#[derive(Clone, Debug)]
pub struct VinbergRun {
    pub controller: Vec<BigInt>,
    pub roots: Vec<AcceptedRoot>,
    pub status: Status,
    pub census: Option<Census>,
    gram: IntMatrix,
}

impl VinbergRun {
    /// Gram matrix of the accepted roots.
    pub fn root_gram(&self) -> IntMatrix {
        let cols: Vec<Vec<BigInt>> = self.roots.iter().map(|r| r.vector.clone()).collect();
        if cols.is_empty() {
            return Matrix::zeros(0, 0);
        }
        self.gram.congruent(&Matrix::from_cols(cols))
    }

    pub fn diagram(&self) -> Result<CoxeterDiagram> {
        diagram_from_roots(&self.root_gram())
    }

    /// Accepted roots grouped by height.
    pub fn levels(&self) -> BTreeMap<BigRational, Vec<Vec<BigInt>>> {
        let mut m: BTreeMap<BigRational, Vec<Vec<BigInt>>> = BTreeMap::new();
        for r in &self.roots {
            m.entry(r.height.clone()).or_default().push(r.vector.clone());
        }
        m
    }
}

/// Lexicographic sign: the first nonzero coordinate of `T v`.
fn lex_key(frame: &Option<IntMatrix>, v: &[BigInt]) -> Vec<BigInt> {
    match frame {
        Some(t) => t.mul_vec(v),
        None => v.to_vec(),
    }
}

fn lex_positive(key: &[BigInt]) -> bool {
    key.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_positive())
}

/// One height level: every pair `(c, k)` with `c^2/k` equal to the level.
struct LevelIter {
    norms: Vec<(BigInt, BigInt)>,
    next_j: Vec<BigInt>,
}

impl LevelIter {
    fn new(norms: &[u64], step: &BigInt) -> Self {
        // (r,p) is a multiple of the step and, by crystallography, of k/2
        let norms: Vec<(BigInt, BigInt)> = norms
            .iter()
            .map(|&k| {
                let k = BigInt::from(k);
                let half = if k.is_even() { &k / 2 } else { k.clone() };
                let s = step.lcm(&half);
                (k, s)
            })
            .collect();
        let next_j = vec![BigInt::one(); norms.len()];
        LevelIter { norms, next_j }
    }

    fn height(&self, i: usize) -> BigRational {
        let c = &self.next_j[i] * &self.norms[i].1;
        BigRational::new(&c * &c, self.norms[i].0.clone())
    }

    /// Next level height and its `(c, k)` pairs.
    fn next(&mut self) -> Option<(BigRational, Vec<(BigInt, BigInt)>)> {
        let h = (0..self.norms.len()).map(|i| self.height(i)).min()?;
        let mut pairs = vec![];
        for i in 0..self.norms.len() {
            if self.height(i) == h {
                pairs.push((&self.next_j[i] * &self.norms[i].1, self.norms[i].0.clone()));
                self.next_j[i] += 1;
            }
        }
        Some((h, pairs))
    }
}

pub fn run_vinberg(config: &VinbergConfig) -> Result<VinbergRun> {
    let l = &config.lattice;
    let sig = l.signature();
    if sig.pos != 1 || sig.zero != 0 || sig.neg < 2 {
        return Err(Error::Invalid(format!("signature ({}, {}) is not (1, n) with n >= 2", sig.pos, sig.neg)));
    }
    if config.allowed_norms.is_empty() || config.allowed_norms.contains(&0) {
        return Err(Error::Invalid("allowed norms must be nonempty and positive".into()));
    }
    let p = &config.controller;
    let slices = SliceEnumerator::new(l, p)?;
    let n = l.rank() - 1;
    let gram = &l.gram;
    let admissible = |v: &[BigInt], k: &BigInt| -> Result<bool> {
        let norm = -k;
        Ok(content(v).is_one() && is_crystallographic(gram, v, &norm) && config.predicate.accepts(v, &norm)?)
    };

    // height 0: simple roots of the finite root system in p^⊥
    let mut zero: Vec<(Vec<BigInt>, BigInt)> = vec![];
    for &k in &config.allowed_norms {
        let k = BigInt::from(k);
        for v in slices.vectors(&BigInt::zero(), &-&k)? {
            if admissible(&v, &k)? {
                zero.push((v, -&k));
            }
        }
    }
    let positive: Vec<(Vec<BigInt>, BigInt)> =
        zero.into_iter().filter(|(v, _)| lex_positive(&lex_key(&config.frame, v))).collect();
    let pos_set: HashSet<Vec<BigInt>> = positive.iter().map(|(v, _)| v.clone()).collect();
    let mut simple: Vec<(Vec<BigInt>, BigInt)> = positive
        .iter()
        .filter(|(v, _)| {
            !positive.iter().any(|(s, _)| {
                let d: Vec<BigInt> = v.iter().zip(s).map(|(a, b)| a - b).collect();
                pos_set.contains(&d)
            })
        })
        .cloned()
        .collect();
    simple.sort_by(|a, b| lex_key(&config.frame, &b.0).cmp(&lex_key(&config.frame, &a.0)));
    let mut roots: Vec<AcceptedRoot> = simple
        .into_iter()
        .map(|(vector, norm)| AcceptedRoot { vector, norm, product: BigInt::zero(), height: BigRational::zero() })
        .collect();

    let mut census = None;
    let mut status = Status::Running;
    let check = |roots: &[AcceptedRoot]| -> Result<Census> {
        let cols: Vec<Vec<BigInt>> = roots.iter().map(|r| r.vector.clone()).collect();
        let g = gram.congruent(&Matrix::from_cols(cols));
        Ok(finite_volume(&diagram_from_roots(&g)?, n))
    };
    if !roots.is_empty() {
        let c = check(&roots)?;
        if c.finite_volume {
            status = Status::Finished;
        }
        census = Some(c);
    }
    let mut levels = LevelIter::new(&config.allowed_norms, slices.step());
    while status == Status::Running {
        let (h, pairs) = levels.next().expect("allowed norms are nonempty");
        if config.max_height.as_ref().is_some_and(|m| &h > m) {
            status = Status::HeightCapped;
            break;
        }
        let mut cands: Vec<(Vec<BigInt>, BigInt, BigInt)> = vec![];
        for (c, k) in pairs {
            for v in slices.vectors(&c, &-&k)? {
                if admissible(&v, &k)? {
                    cands.push((v, -&k, c.clone()));
                }
            }
        }
        cands.sort_by(|a, b| lex_key(&config.frame, &b.0).cmp(&lex_key(&config.frame, &a.0)));
        let before = roots.len();
        for (v, norm, c) in cands {
            let gv = gram.mul_vec(&v);
            let ok = roots.iter().all(|r| !crate::exact::matrix::dot(&gv, &r.vector).is_negative());
            if ok {
                roots.push(AcceptedRoot { vector: v, norm, product: c, height: h.clone() });
            }
        }
        if roots.len() > before {
            let c = check(&roots)?;
            if c.finite_volume {
                status = Status::Finished;
            }
            census = Some(c);
        }
    }
    Ok(VinbergRun { controller: p.clone(), roots, status, census, gram: gram.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::matrix::int_vec;
    use crate::zlattice::build_z;

    #[test]
    fn crystallographic_examples() {
        let l = build_z("(2)+A1^2").unwrap();
        // (0,1,1) has norm -4 and 2(r,e_i) = -4 for i = 1, 2
        assert!(crystallographic_check(&l, &int_vec(&[0, 1, 1])).unwrap());
        // (1,2,1): norm 2 - 8 - 2 = -8, but 2(r,e_0) = 4
        assert!(!crystallographic_check(&l, &int_vec(&[1, 2, 1])).unwrap());
        assert!(crystallographic_check(&l, &int_vec(&[0, 2, 2])).is_err());
    }

    #[test]
    fn default_norms() {
        assert_eq!(default_allowed_norms(&build_z("(2)+A1^3").unwrap()), vec![2, 4]);
        assert_eq!(default_allowed_norms(&build_z("U").unwrap()), vec![2]);
        assert_eq!(default_allowed_norms(&build_z("(2)+A1^2+D4(2)").unwrap()), vec![2, 4, 8]);
    }

    #[test]
    fn z12_triangle() {
        let l = build_z("(2)+A1^2").unwrap();
        let run = run_vinberg(&VinbergConfig::new(l).unwrap()).unwrap();
        assert_eq!(run.status, Status::Finished);
        let vs: Vec<Vec<BigInt>> = run.roots.iter().map(|r| r.vector.clone()).collect();
        assert_eq!(vs, vec![int_vec(&[0, 1, -1]), int_vec(&[0, 0, 1]), int_vec(&[1, -1, -1])]);
        assert_eq!(run.roots[2].height, BigRational::from_integer(2.into()));
    }
}
