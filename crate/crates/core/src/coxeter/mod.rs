//! Coxeter diagrams of hyperbolic reflection groups and abstract Coxeter systems.
//!
//! Simple roots are stored with their Gram matrix; roots are acute-angled, so
//! off-diagonal entries are nonnegative and the diagonal is negative.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::matrix::IntMatrix;

pub mod automorphism;
pub mod classify;
pub mod f2class;
pub mod render;
pub mod richardson;
pub mod volume;

pub use automorphism::{diagram_automorphisms, shape_isomorphism, AutomorphismGroup};
pub use classify::{classify_component, type_name, CoxType};
pub use f2class::{f2_class_of, F2Class};
pub use render::{render, Format};
pub use richardson::{involution_classes, negation_partners, InvolutionClass};
pub use volume::{classify_subdiagram, finite_volume, Census, Subdiagram};

/// Relative position of two walls.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Edge {
    /// Dihedral angle `π/m`; `m = 2` means orthogonal (no edge drawn).
    Angle(u32),
    Parallel,
    /// Carries the Gram entry, which determines the distance between the walls.
    Ultraparallel(BigInt),
}

impl Edge {
    /// Coxeter exponent, `None` for `∞`.
    pub fn m(&self) -> Option<u32> {
        match self {
            Edge::Angle(m) => Some(*m),
            _ => None,
        }
    }

    pub fn class(&self) -> EdgeClass {
        match self {
            Edge::Angle(m) => EdgeClass::Angle(*m),
            Edge::Parallel => EdgeClass::Parallel,
            Edge::Ultraparallel(_) => EdgeClass::Ultraparallel,
        }
    }
}

/// Edge data without the ultraparallel distance, as drawn in a diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EdgeClass {
    Angle(u32),
    Parallel,
    Ultraparallel,
}

/// Edge class of a pair of roots from `t = g_ij^2 / (g_ii g_jj)`.
pub fn classify_edge(gii: &BigInt, gjj: &BigInt, gij: &BigInt) -> Result<Edge> {
    let t = BigRational::new(gij * gij, gii * gjj);
    let q = |a: i64, b: i64| BigRational::new(BigInt::from(a), BigInt::from(b));
    let e = if t.is_zero() {
        Edge::Angle(2)
    } else if t == q(1, 4) {
        Edge::Angle(3)
    } else if t == q(1, 2) {
        Edge::Angle(4)
    } else if t == q(3, 4) {
        Edge::Angle(6)
    } else if t.is_one() {
        Edge::Parallel
    } else if t > BigRational::one() {
        Edge::Ultraparallel(gij.clone())
    } else {
        return Err(Error::Invalid(format!("non-crystallographic angle: t = {t}")));
    };
    Ok(e)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterDiagram {
    pub labels: Vec<String>,
    pub gram: IntMatrix,
    edges: Vec<Vec<Edge>>,
}

/// Build the diagram of a set of simple roots from their Gram matrix.
pub fn diagram_from_roots(gram: &IntMatrix) -> Result<CoxeterDiagram> {
    let labels = (1..=gram.rows()).map(|i| format!("r{i}")).collect();
    CoxeterDiagram::new(labels, gram.clone())
}

impl CoxeterDiagram {
    pub fn new(labels: Vec<String>, gram: IntMatrix) -> Result<Self> {
        let n = gram.rows();
        if !gram.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        if labels.len() != n {
            return Err(Error::DimensionMismatch("one label per root".into()));
        }
        let mut edges = vec![vec![Edge::Angle(1); n]; n];
        for i in 0..n {
            if !gram[(i, i)].is_negative() {
                return Err(Error::Invalid(format!("root {} has nonnegative norm", labels[i])));
            }
            for j in i + 1..n {
                if gram[(i, j)].is_negative() {
                    return Err(Error::Invalid(format!("roots {} and {} form an obtuse pair", labels[i], labels[j])));
                }
                let e = classify_edge(&gram[(i, i)], &gram[(j, j)], &gram[(i, j)])
                    .map_err(|e| Error::Invalid(format!("{} {}: {e}", labels[i], labels[j])))?;
                edges[i][j] = e.clone();
                edges[j][i] = e;
            }
        }
        Ok(CoxeterDiagram { labels, gram, edges })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn norm(&self, i: usize) -> &BigInt {
        &self.gram[(i, i)]
    }

    pub fn edge(&self, i: usize, j: usize) -> &Edge {
        &self.edges[i][j]
    }

    /// Coxeter matrix with `0` standing for `∞`.
    pub fn coxeter_matrix(&self) -> Vec<Vec<u32>> {
        let n = self.len();
        (0..n).map(|i| (0..n).map(|j| if i == j { 1 } else { self.edges[i][j].m().unwrap_or(0) }).collect()).collect()
    }

    pub fn system(&self) -> CoxeterSystem {
        CoxeterSystem { m: self.coxeter_matrix() }
    }

    pub fn shape(&self) -> DiagramShape {
        let n = self.len();
        let norms = (0..n).map(|i| self.norm(i).clone()).collect();
        let mut edges = BTreeMap::new();
        for i in 0..n {
            for j in i + 1..n {
                let c = self.edges[i][j].class();
                if c != EdgeClass::Angle(2) {
                    edges.insert((i, j), c);
                }
            }
        }
        DiagramShape { norms, edges }
    }

    pub fn subdiagram(&self, nodes: &[usize]) -> CoxeterDiagram {
        CoxeterDiagram {
            labels: nodes.iter().map(|&i| self.labels[i].clone()).collect(),
            gram: self.gram.principal(nodes),
            edges: nodes.iter().map(|&i| nodes.iter().map(|&j| self.edges[i][j].clone()).collect()).collect(),
        }
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// Node norms and drawn edges: what a printed diagram records.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramShape {
    pub norms: Vec<BigInt>,
    /// Keys `(i, j)` with `i < j`; orthogonal pairs are absent.
    pub edges: BTreeMap<(usize, usize), EdgeClass>,
}

impl DiagramShape {
    pub fn new(norms: &[i64], edges: &[(usize, usize, EdgeClass)]) -> Self {
        let mut map = BTreeMap::new();
        for &(a, b, c) in edges {
            if c != EdgeClass::Angle(2) {
                map.insert((a.min(b), a.max(b)), c);
            }
        }
        DiagramShape { norms: norms.iter().map(|&k| BigInt::from(k)).collect(), edges: map }
    }

    pub fn len(&self) -> usize {
        self.norms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.norms.is_empty()
    }

    pub fn edge(&self, i: usize, j: usize) -> EdgeClass {
        if i == j {
            return EdgeClass::Angle(1);
        }
        *self.edges.get(&(i.min(j), i.max(j))).unwrap_or(&EdgeClass::Angle(2))
    }
}

/// Abstract Coxeter system given by its Coxeter matrix; `0` encodes `∞`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoxeterSystem {
    pub m: Vec<Vec<u32>>,
}

impl CoxeterSystem {
    pub fn new(m: Vec<Vec<u32>>) -> Result<Self> {
        let n = m.len();
        for i in 0..n {
            if m[i].len() != n {
                return Err(Error::DimensionMismatch("Coxeter matrix must be square".into()));
            }
            if m[i][i] != 1 {
                return Err(Error::Invalid("diagonal of a Coxeter matrix is 1".into()));
            }
            for j in 0..n {
                if m[i][j] != m[j][i] {
                    return Err(Error::NotSymmetric);
                }
                if i != j && m[i][j] == 1 {
                    return Err(Error::Invalid("off-diagonal Coxeter exponents are at least 2".into()));
                }
            }
        }
        Ok(CoxeterSystem { m })
    }

    pub fn rank(&self) -> usize {
        self.m.len()
    }

    /// System whose diagram is a tree or cycle given by edges `(i, j, m)`; other pairs commute.
    pub fn from_edges(n: usize, edges: &[(usize, usize, u32)]) -> Result<Self> {
        let mut m = vec![vec![2u32; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        for &(a, b, k) in edges {
            if a >= n || b >= n || a == b {
                return Err(Error::Invalid(format!("bad edge ({a}, {b})")));
            }
            m[a][b] = k;
            m[b][a] = k;
        }
        CoxeterSystem::new(m)
    }

    /// Standard systems: `A_n, B_n, D_n, E6..E8, F4, G2, H3, H4, I2(m)`.
    ///
    /// `E_n` uses a chain `0..n-2` with node `n-1` attached to node 2.
    pub fn of_type(name: &str) -> Result<Self> {
        let bad = || Error::UnknownName(name.to_string());
        if let Some(rest) = name.strip_prefix("I2(") {
            let m: u32 = rest.strip_suffix(')').and_then(|s| s.parse().ok()).ok_or_else(bad)?;
            return CoxeterSystem::from_edges(2, &[(0, 1, m)]);
        }
        let (fam, n) = name.split_at(1);
        let n: usize = n.parse().map_err(|_| bad())?;
        let chain = |n: usize, last: u32| -> Vec<(usize, usize, u32)> {
            (0..n.saturating_sub(1)).map(|i| (i, i + 1, if i + 2 == n { last } else { 3 })).collect()
        };
        match (fam, n) {
            ("A", n) if n >= 1 => CoxeterSystem::from_edges(n, &chain(n, 3)),
            ("B", n) if n >= 2 => CoxeterSystem::from_edges(n, &chain(n, 4)),
            ("D", n) if n >= 4 => {
                let mut e = chain(n - 1, 3);
                e.push((n - 3, n - 1, 3));
                CoxeterSystem::from_edges(n, &e)
            }
            ("E", n) if (6..=8).contains(&n) => {
                let mut e = chain(n - 1, 3);
                e.push((2, n - 1, 3));
                CoxeterSystem::from_edges(n, &e)
            }
            ("F", 4) => CoxeterSystem::from_edges(4, &[(0, 1, 3), (1, 2, 4), (2, 3, 3)]),
            ("G", 2) => CoxeterSystem::from_edges(2, &[(0, 1, 6)]),
            ("H", n) if n == 3 || n == 4 => {
                let mut e = chain(n, 3);
                e[0].2 = 5;
                CoxeterSystem::from_edges(n, &e)
            }
            _ => Err(bad()),
        }
    }

    /// Whether every exponent is one of `2, 3, 4, 6, ∞`.
    pub fn is_crystallographic(&self) -> bool {
        self.m.iter().flatten().all(|&k| matches!(k, 0 | 1 | 2 | 3 | 4 | 6))
    }

    /// Integral Cartan matrix `A_ij = <α_i^∨, α_j>`; for `m = 4, 6` the long root is the
    /// lower-indexed one. Only for crystallographic systems without `∞`.
    pub fn cartan_matrix(&self) -> Result<Vec<Vec<i64>>> {
        let n = self.rank();
        let mut a = vec![vec![0i64; n]; n];
        for i in 0..n {
            a[i][i] = 2;
            for j in i + 1..n {
                let (x, y) = match self.m[i][j] {
                    2 => (0, 0),
                    3 => (-1, -1),
                    4 => (-1, -2),
                    6 => (-1, -3),
                    k => return Err(Error::Invalid(format!("no integral Cartan entry for m = {k}"))),
                };
                a[i][j] = x;
                a[j][i] = y;
            }
        }
        Ok(a)
    }

    /// Simple reflections in root coordinates: `s_i(x) = x - (Σ_j A_ij x_j) α_i`.
    pub fn reflection_matrices(&self) -> Result<Vec<Vec<Vec<i64>>>> {
        let a = self.cartan_matrix()?;
        let n = self.rank();
        Ok((0..n)
            .map(|i| {
                let mut s: Vec<Vec<i64>> = (0..n).map(|r| (0..n).map(|c| (r == c) as i64).collect()).collect();
                for j in 0..n {
                    s[i][j] -= a[i][j];
                }
                s
            })
            .collect())
    }
}

/// Product of small integer matrices.
pub(crate) fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let k = b.len();
    let m = if k == 0 { 0 } else { b[0].len() };
    let mut c = vec![vec![0i64; m]; n];
    for i in 0..n {
        for t in 0..k {
            let x = a[i][t];
            if x != 0 {
                for j in 0..m {
                    c[i][j] += x * b[t][j];
                }
            }
        }
    }
    c
}

pub(crate) fn mat_identity(n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::matrix::int_matrix;

    #[test]
    fn edge_rules() {
        let g = |a: i64, b: i64, c: i64| classify_edge(&BigInt::from(a), &BigInt::from(b), &BigInt::from(c));
        assert_eq!(g(-2, -2, 0).unwrap(), Edge::Angle(2));
        assert_eq!(g(-2, -2, 1).unwrap(), Edge::Angle(3));
        assert_eq!(g(-2, -4, 2).unwrap(), Edge::Angle(4));
        assert_eq!(g(-2, -6, 3).unwrap(), Edge::Angle(6));
        assert_eq!(g(-2, -2, 2).unwrap(), Edge::Parallel);
        assert_eq!(g(-2, -2, 4).unwrap(), Edge::Ultraparallel(BigInt::from(4)));
        assert!(g(-2, -4, 1).is_err());
    }

    #[test]
    fn orthogonal_roots_give_isolated_nodes() {
        let d = diagram_from_roots(&int_matrix(&[&[-2, 0], &[0, -2]])).unwrap();
        assert!(d.shape().edges.is_empty());
    }
}
