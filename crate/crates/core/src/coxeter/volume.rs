//! Elliptic and parabolic subdiagrams, and Vinberg's finite-volume criterion.

use serde::Serialize;

use crate::exact::quadratic::signature;

use super::classify::{classify_all, components, type_name_ascii, CoxType};
use super::CoxeterDiagram;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Subdiagram {
    /// Negative definite.
    Elliptic { rank: usize, types: Vec<CoxType> },
    /// Negative semidefinite of rank `|J| - #components`.
    Parabolic { rank: usize, types: Vec<CoxType> },
    /// Neither of the above (including semidefinite subdiagrams with elliptic components).
    Indefinite,
}

impl Subdiagram {
    pub fn type_name(&self) -> Option<String> {
        match self {
            Subdiagram::Elliptic { types, .. } | Subdiagram::Parabolic { types, .. } => Some(type_name_ascii(types)),
            Subdiagram::Indefinite => None,
        }
    }
}

fn gram_components(d: &CoxeterDiagram, nodes: &[usize]) -> usize {
    let m: Vec<Vec<u32>> = (0..d.len())
        .map(|i| {
            (0..d.len())
                .map(|j| {
                    if i == j {
                        1
                    } else if d.gram[(i, j)] == 0.into() {
                        2
                    } else {
                        3
                    }
                })
                .collect()
        })
        .collect();
    components(&m, nodes).len()
}

pub fn classify_subdiagram(d: &CoxeterDiagram, nodes: &[usize]) -> Subdiagram {
    let sig = signature(&d.gram.principal(nodes));
    if sig.pos > 0 {
        return Subdiagram::Indefinite;
    }
    let m = d.coxeter_matrix();
    let types = || classify_all(&m, nodes).unwrap_or_default();
    if sig.zero == 0 {
        return Subdiagram::Elliptic { rank: nodes.len(), types: types() };
    }
    let c = gram_components(d, nodes);
    if sig.neg + c == nodes.len() {
        return Subdiagram::Parabolic { rank: sig.neg, types: types() };
    }
    Subdiagram::Indefinite
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Face {
    pub nodes: Vec<usize>,
    pub kind: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Census {
    pub dimension: usize,
    pub finite_volume: bool,
    /// Elliptic subdiagrams of rank `n`.
    pub vertices: Vec<Face>,
    /// Parabolic subdiagrams of rank `n - 1`.
    pub cusps: Vec<Face>,
    /// Elliptic subdiagrams of rank `n - 1`.
    pub edges: usize,
    /// Rank `n - 1` elliptic subdiagrams whose number of extensions is not 2.
    pub defects: Vec<(Vec<usize>, usize)>,
}

fn bits(v: &[usize]) -> u64 {
    v.iter().fold(0u64, |acc, &i| acc | (1u64 << i))
}

/// Finite-volume test for the polytope of a diagram in hyperbolic `n`-space.
///
/// Every elliptic subdiagram of rank `n - 1` must extend in exactly two ways to an
/// elliptic subdiagram of rank `n` or a parabolic one of rank `n - 1`, and at least
/// one such subdiagram must exist.
pub fn finite_volume(d: &CoxeterDiagram, n: usize) -> Census {
    assert!(d.len() <= 64, "diagrams are limited to 64 nodes");
    let mut ell_edges: Vec<Vec<usize>> = vec![];
    let mut vertices: Vec<(u64, Face)> = vec![];
    let mut cusps: Vec<(u64, Face)> = vec![];
    let mut cur: Vec<usize> = vec![];
    search(d, n, 0, &mut cur, &mut ell_edges, &mut vertices, &mut cusps);
    let mut defects = vec![];
    for e in &ell_edges {
        let b = bits(e);
        let count = vertices.iter().chain(cusps.iter()).filter(|(v, _)| v & b == b).count();
        if count != 2 {
            defects.push((e.clone(), count));
        }
    }
    let finite_volume = n >= 1 && !ell_edges.is_empty() && defects.is_empty();
    Census {
        dimension: n,
        finite_volume,
        vertices: vertices.into_iter().map(|x| x.1).collect(),
        cusps: cusps.into_iter().map(|x| x.1).collect(),
        edges: ell_edges.len(),
        defects,
    }
}

/// Depth-first search over negative semidefinite subsets in increasing index order.
fn search(
    d: &CoxeterDiagram,
    n: usize,
    start: usize,
    cur: &mut Vec<usize>,
    ell_edges: &mut Vec<Vec<usize>>,
    vertices: &mut Vec<(u64, Face)>,
    cusps: &mut Vec<(u64, Face)>,
) {
    for i in start..d.len() {
        cur.push(i);
        let sig = signature(&d.gram.principal(cur));
        if sig.pos == 0 {
            if sig.zero == 0 {
                if cur.len() + 1 == n {
                    ell_edges.push(cur.clone());
                } else if cur.len() == n {
                    let kind = classify_subdiagram(d, cur).type_name().unwrap_or_default();
                    vertices.push((bits(cur), Face { nodes: cur.clone(), kind }));
                }
            } else if sig.neg + 1 == n {
                if let Subdiagram::Parabolic { types, .. } = classify_subdiagram(d, cur) {
                    cusps.push((bits(cur), Face { nodes: cur.clone(), kind: type_name_ascii(&types) }));
                }
            }
            search(d, n, i + 1, cur, ell_edges, vertices, cusps);
        }
        cur.pop();
    }
}
