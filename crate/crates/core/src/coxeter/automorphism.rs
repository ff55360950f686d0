//! Symmetries of Coxeter diagrams by backtracking.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use super::{CoxeterDiagram, DiagramShape};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AutomorphismGroup {
    pub order: usize,
    pub generators: Vec<Vec<usize>>,
    /// All permutations, sorted; `p[i]` is the image of node `i`.
    pub elements: Vec<Vec<usize>>,
}

/// Permutations preserving the full Gram matrix, or only norms and edge classes
/// when `labels_only` is set.
pub fn diagram_automorphisms(d: &CoxeterDiagram, labels_only: bool) -> AutomorphismGroup {
    let n = d.len();
    let mut elements = if labels_only {
        let s = d.shape();
        backtrack(n, &|i, a| s.norms[i] == s.norms[a], &|i, j, a, b| s.edge(i, j) == s.edge(a, b), false)
    } else {
        let g = &d.gram;
        backtrack(n, &|i, a| g[(i, i)] == g[(a, a)], &|i, j, a, b| g[(i, j)] == g[(a, b)], false)
    };
    elements.sort();
    let generators = generators_of(&elements);
    AutomorphismGroup { order: elements.len(), generators, elements }
}

/// A node bijection `a -> b` preserving norms and edge classes.
pub fn shape_isomorphism(a: &DiagramShape, b: &DiagramShape) -> Option<Vec<usize>> {
    if a.len() != b.len() || a.edges.len() != b.edges.len() {
        return None;
    }
    let mut na: Vec<_> = a.norms.clone();
    let mut nb: Vec<_> = b.norms.clone();
    na.sort();
    nb.sort();
    if na != nb {
        return None;
    }
    backtrack(a.len(), &|i, x| a.norms[i] == b.norms[x], &|i, j, x, y| a.edge(i, j) == b.edge(x, y), true)
        .into_iter()
        .next()
}

fn backtrack(
    n: usize,
    node_ok: &dyn Fn(usize, usize) -> bool,
    pair_ok: &dyn Fn(usize, usize, usize, usize) -> bool,
    first_only: bool,
) -> Vec<Vec<usize>> {
    let mut out = vec![];
    let mut img: Vec<usize> = vec![];
    let mut used = vec![false; n];
    fn rec(
        n: usize,
        img: &mut Vec<usize>,
        used: &mut Vec<bool>,
        node_ok: &dyn Fn(usize, usize) -> bool,
        pair_ok: &dyn Fn(usize, usize, usize, usize) -> bool,
        out: &mut Vec<Vec<usize>>,
        first_only: bool,
    ) {
        if first_only && !out.is_empty() {
            return;
        }
        let i = img.len();
        if i == n {
            out.push(img.clone());
            return;
        }
        for a in 0..n {
            if used[a] || !node_ok(i, a) {
                continue;
            }
            if (0..i).all(|j| pair_ok(i, j, a, img[j])) {
                used[a] = true;
                img.push(a);
                rec(n, img, used, node_ok, pair_ok, out, first_only);
                img.pop();
                used[a] = false;
            }
        }
    }
    rec(n, &mut img, &mut used, node_ok, pair_ok, &mut out, first_only);
    out
}

pub fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    // (p ∘ q)(i) = p(q(i))
    q.iter().map(|&i| p[i]).collect()
}

fn closure(gens: &[Vec<usize>], n: usize) -> HashSet<Vec<usize>> {
    let id: Vec<usize> = (0..n).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = compose(g, &x);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

fn generators_of(elements: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let Some(first) = elements.first() else { return vec![] };
    let n = first.len();
    let mut gens: Vec<Vec<usize>> = vec![];
    let mut span = closure(&gens, n);
    for e in elements {
        if !span.contains(e) {
            gens.push(e.clone());
            span = closure(&gens, n);
        }
    }
    gens
}

pub fn order_of(p: &[usize]) -> usize {
    let id: Vec<usize> = (0..p.len()).collect();
    let mut x = p.to_vec();
    let mut k = 1;
    while x != id {
        x = compose(p, &x);
        k += 1;
    }
    k
}
