//! Names of connected finite and affine Coxeter diagrams.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CoxType {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    G2,
    H3,
    H4,
    I2(u32),
    AffA(usize),
    AffB(usize),
    AffC(usize),
    AffD(usize),
    AffE(usize),
    AffF4,
    AffG2,
}

impl CoxType {
    pub fn is_finite(&self) -> bool {
        !self.is_affine()
    }

    pub fn is_affine(&self) -> bool {
        use CoxType::*;
        matches!(self, AffA(_) | AffB(_) | AffC(_) | AffD(_) | AffE(_) | AffF4 | AffG2)
    }

    /// Rank of the Gram matrix: number of nodes, minus one for affine types.
    pub fn rank(&self) -> usize {
        use CoxType::*;
        match *self {
            A(n) | B(n) | D(n) | E(n) => n,
            F4 | H4 => 4,
            H3 => 3,
            G2 | I2(_) => 2,
            AffA(n) | AffB(n) | AffC(n) | AffD(n) | AffE(n) => n,
            AffF4 => 4,
            AffG2 => 2,
        }
    }

    fn letter(&self) -> (&'static str, String) {
        use CoxType::*;
        match *self {
            A(n) | AffA(n) => ("A", n.to_string()),
            B(n) | AffB(n) => ("B", n.to_string()),
            AffC(n) => ("C", n.to_string()),
            D(n) | AffD(n) => ("D", n.to_string()),
            E(n) | AffE(n) => ("E", n.to_string()),
            F4 | AffF4 => ("F", "4".into()),
            G2 | AffG2 => ("G", "2".into()),
            H3 => ("H", "3".into()),
            H4 => ("H", "4".into()),
            I2(m) => ("I", format!("2({m})")),
        }
    }

    /// ASCII name, affine types prefixed with `~`.
    pub fn ascii(&self) -> String {
        let (l, n) = self.letter();
        if self.is_affine() {
            format!("~{l}{n}")
        } else {
            format!("{l}{n}")
        }
    }
}

impl fmt::Display for CoxType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (l, n) = self.letter();
        if self.is_affine() {
            write!(f, "{l}\u{303}{n}")
        } else {
            write!(f, "{l}{n}")
        }
    }
}

/// Name of a diagram with the given components, e.g. `D4A1`, `A1^3`; `1` when empty.
///
/// Finite components come first, then by decreasing rank, then alphabetically.
pub fn type_name(types: &[CoxType]) -> String {
    type_name_with(types, |t| t.to_string())
}

pub fn type_name_ascii(types: &[CoxType]) -> String {
    type_name_with(types, |t| t.ascii())
}

fn type_name_with(types: &[CoxType], name: impl Fn(&CoxType) -> String) -> String {
    if types.is_empty() {
        return "1".into();
    }
    let mut t = types.to_vec();
    t.sort_by(|a, b| {
        (a.is_affine(), std::cmp::Reverse(a.rank()), name(a)).cmp(&(
            b.is_affine(),
            std::cmp::Reverse(b.rank()),
            name(b),
        ))
    });
    let mut out = String::new();
    let mut i = 0;
    while i < t.len() {
        let mut j = i;
        while j < t.len() && t[j] == t[i] {
            j += 1;
        }
        out.push_str(&name(&t[i]));
        if j - i > 1 {
            out.push_str(&format!("^{}", j - i));
        }
        i = j;
    }
    out
}

/// Connected components of `nodes` in the graph of pairs with `m != 2`.
pub fn components(m: &[Vec<u32>], nodes: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; nodes.len()];
    let mut out = vec![];
    for s in 0..nodes.len() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![nodes[s]];
        let mut stack = vec![s];
        while let Some(a) = stack.pop() {
            for b in 0..nodes.len() {
                if !seen[b] && m[nodes[a]][nodes[b]] != 2 {
                    seen[b] = true;
                    comp.push(nodes[b]);
                    stack.push(b);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Type of a connected subdiagram together with a standard ordering of its nodes.
///
/// Orderings: paths from one end (for `B_n`, `H_n` the special edge is last);
/// `D_n` as `[leaf, leaf, branch, long leg outward]`; `E_n` as
/// `[branch, short leg, middle leg outward, long leg outward]`.
pub fn classify_component(m: &[Vec<u32>], comp: &[usize]) -> Option<(CoxType, Vec<usize>)> {
    use CoxType::*;
    let n = comp.len();
    let mm = |a: usize, b: usize| m[a][b];
    if n == 0 {
        return None;
    }
    if n == 1 {
        return Some((A(1), comp.to_vec()));
    }
    if n == 2 {
        let k = mm(comp[0], comp[1]);
        let t = match k {
            2 => return None,
            3 => A(2),
            4 => B(2),
            6 => G2,
            0 => AffA(1),
            k => I2(k),
        };
        return Some((t, comp.to_vec()));
    }
    let nbrs = |a: usize| -> Vec<usize> { comp.iter().copied().filter(|&b| b != a && mm(a, b) != 2).collect() };
    let mut edge_count = 0;
    for (x, &a) in comp.iter().enumerate() {
        for &b in &comp[x + 1..] {
            let k = mm(a, b);
            if k == 0 {
                return None;
            }
            if k != 2 {
                edge_count += 1;
            }
        }
    }
    if edge_count == n {
        // only Ã_{n-1} is a cycle
        if comp.iter().all(|&a| nbrs(a).len() == 2) {
            let order = walk(comp[0], None, &nbrs, n);
            if order.len() == n && order.windows(2).all(|w| mm(w[0], w[1]) == 3) && mm(order[0], order[n - 1]) == 3 {
                return Some((AffA(n - 1), order));
            }
        }
        return None;
    }
    if edge_count != n - 1 {
        return None;
    }
    let branches: Vec<usize> = comp.iter().copied().filter(|&a| nbrs(a).len() >= 3).collect();
    match branches.len() {
        0 => {
            let end = *comp.iter().find(|&&a| nbrs(a).len() == 1)?;
            let mut order = walk(end, None, &nbrs, n);
            let mut marks: Vec<u32> = order.windows(2).map(|w| mm(w[0], w[1])).collect();
            let special: Vec<usize> = (0..marks.len()).filter(|&i| marks[i] != 3).collect();
            match special.len() {
                0 => Some((A(n), order)),
                1 => {
                    let mut p = special[0];
                    if p < marks.len() - 1 - p {
                        order.reverse();
                        marks.reverse();
                        p = marks.len() - 1 - p;
                    }
                    let at_end = p == marks.len() - 1;
                    let t = match (marks[p], n, at_end) {
                        (4, n, true) => B(n),
                        (4, 4, false) => F4,
                        (4, 5, false) if p == 2 => AffF4,
                        (5, 3, true) => H3,
                        (5, 4, true) => H4,
                        (6, 3, true) => AffG2,
                        _ => return None,
                    };
                    Some((t, order))
                }
                2 if marks[0] == 4 && marks[n - 2] == 4 => Some((AffC(n - 1), order)),
                _ => None,
            }
        }
        1 => {
            let b = branches[0];
            let nb = nbrs(b);
            let legs: Vec<Vec<usize>> = nb.iter().map(|&x| walk(x, Some(b), &nbrs, n)).collect();
            if nb.len() == 4 {
                let ok = n == 5 && legs.iter().all(|l| l.len() == 1) && nb.iter().all(|&x| mm(b, x) == 3);
                return ok.then(|| (AffD(4), std::iter::once(b).chain(nb.iter().copied()).collect()));
            }
            if nb.len() != 3 {
                return None;
            }
            let mut legs = legs;
            legs.sort_by_key(|l| l.len());
            let leg_marks: Vec<Vec<u32>> = legs
                .iter()
                .map(|l| {
                    std::iter::once(b)
                        .chain(l.iter().copied())
                        .collect::<Vec<_>>()
                        .windows(2)
                        .map(|w| mm(w[0], w[1]))
                        .collect()
                })
                .collect();
            let lens: Vec<usize> = legs.iter().map(|l| l.len()).collect();
            let all3 = leg_marks.iter().flatten().all(|&k| k == 3);
            if all3 {
                let e_order = || -> Vec<usize> { std::iter::once(b).chain(legs.iter().flatten().copied()).collect() };
                let t = match (lens[0], lens[1], lens[2]) {
                    (1, 1, c) => {
                        let order =
                            vec![legs[0][0], legs[1][0], b].into_iter().chain(legs[2].iter().copied()).collect();
                        return Some((D(c + 3), order));
                    }
                    (1, 2, 2) => E(6),
                    (1, 2, 3) => E(7),
                    (1, 2, 4) => E(8),
                    (2, 2, 2) => AffE(6),
                    (1, 3, 3) => AffE(7),
                    (1, 2, 5) => AffE(8),
                    _ => return None,
                };
                return Some((t, e_order()));
            }
            // B̃_n: legs (1, 1, c) with the 4 on the outermost edge of the long leg
            let specials: Vec<(usize, usize)> = leg_marks
                .iter()
                .enumerate()
                .flat_map(|(li, ms)| ms.iter().enumerate().filter(|(_, &k)| k != 3).map(move |(p, _)| (li, p)))
                .collect();
            if specials.len() == 1 && lens[0] == 1 && lens[1] == 1 {
                let (li, p) = specials[0];
                if leg_marks[li][p] == 4 && p == lens[li] - 1 && (li == 2 || lens[2] == 1) {
                    let others: Vec<usize> = (0..3).filter(|&x| x != li).collect();
                    let order = vec![legs[others[0]][0], legs[others[1]][0], b]
                        .into_iter()
                        .chain(legs[li].iter().copied())
                        .collect();
                    return Some((AffB(n - 1), order));
                }
            }
            None
        }
        2 => {
            let all3 = comp.iter().all(|&a| nbrs(a).iter().all(|&x| mm(a, x) == 3));
            let ok = all3
                && branches.iter().all(|&b| {
                    let nb = nbrs(b);
                    nb.len() == 3 && nb.iter().filter(|&&x| nbrs(x).len() == 1).count() == 2
                });
            ok.then(|| (AffD(n - 1), comp.to_vec()))
        }
        _ => None,
    }
}

/// Walk along a path starting at `start`, not stepping back to `from`.
fn walk(start: usize, from: Option<usize>, nbrs: &dyn Fn(usize) -> Vec<usize>, cap: usize) -> Vec<usize> {
    let mut out = vec![start];
    let mut prev = from;
    let mut cur = start;
    while out.len() <= cap {
        let next = nbrs(cur).into_iter().find(|&x| Some(x) != prev && !out.contains(&x));
        match next {
            Some(x) => {
                // stop at another branch point: legs end before it
                if from.is_some() && nbrs(x).len() > 2 {
                    break;
                }
                prev = Some(cur);
                cur = x;
                out.push(x);
            }
            None => break,
        }
    }
    out
}

/// Types of all components, or `None` if some component is unrecognized.
pub fn classify_all(m: &[Vec<u32>], nodes: &[usize]) -> Option<Vec<CoxType>> {
    components(m, nodes).iter().map(|c| classify_component(m, c).map(|(t, _)| t)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterSystem;

    fn ty(name: &str) -> CoxType {
        let s = CoxeterSystem::of_type(name).unwrap();
        let nodes: Vec<usize> = (0..s.rank()).collect();
        classify_component(&s.m, &nodes).unwrap().0
    }

    #[test]
    fn standard_types_recognized() {
        use CoxType::*;
        assert_eq!(ty("A5"), A(5));
        assert_eq!(ty("B4"), B(4));
        assert_eq!(ty("D4"), D(4));
        assert_eq!(ty("D7"), D(7));
        assert_eq!(ty("E6"), E(6));
        assert_eq!(ty("E7"), E(7));
        assert_eq!(ty("E8"), E(8));
        assert_eq!(ty("F4"), F4);
        assert_eq!(ty("G2"), G2);
        assert_eq!(ty("H3"), H3);
        assert_eq!(ty("H4"), H4);
        assert_eq!(ty("I2(8)"), I2(8));
    }

    #[test]
    fn affine_types_recognized() {
        use CoxType::*;
        let sys = |n, e: &[(usize, usize, u32)]| CoxeterSystem::from_edges(n, e).unwrap();
        let all = |s: &CoxeterSystem| classify_component(&s.m, &(0..s.rank()).collect::<Vec<_>>()).map(|x| x.0);
        assert_eq!(all(&sys(3, &[(0, 1, 3), (1, 2, 3), (2, 0, 3)])), Some(AffA(2)));
        assert_eq!(all(&sys(4, &[(0, 2, 3), (1, 2, 3), (2, 3, 4)])), Some(AffB(3)));
        assert_eq!(all(&sys(5, &[(0, 2, 3), (1, 2, 3), (2, 3, 3), (3, 4, 4)])), Some(AffB(4)));
        assert_eq!(all(&sys(3, &[(0, 1, 4), (1, 2, 4)])), Some(AffC(2)));
        assert_eq!(all(&sys(5, &[(0, 2, 3), (1, 2, 3), (2, 3, 3), (2, 4, 3)])), Some(AffD(4)));
        assert_eq!(all(&sys(6, &[(0, 2, 3), (1, 2, 3), (2, 3, 3), (3, 4, 3), (3, 5, 3)])), Some(AffD(5)));
        assert_eq!(all(&sys(5, &[(0, 1, 3), (1, 2, 3), (2, 3, 4), (3, 4, 3)])), Some(AffF4));
        assert_eq!(all(&sys(3, &[(0, 1, 3), (1, 2, 6)])), Some(AffG2));
        let e8t: Vec<(usize, usize, u32)> = (0..7).map(|i| (i, i + 1, 3)).chain(std::iter::once((2, 8, 3))).collect();
        assert_eq!(all(&sys(9, &e8t)), Some(AffE(8)));
        assert_eq!(all(&sys(2, &[(0, 1, 0)])), Some(AffA(1)));
        // B̃ with the 4 next to the branch point is not a Coxeter diagram of a finite or affine group
        assert_eq!(all(&sys(5, &[(0, 2, 3), (1, 2, 3), (2, 3, 4), (3, 4, 3)])), None);
    }

    #[test]
    fn names() {
        use CoxType::*;
        assert_eq!(type_name(&[A(1), D(4)]), "D4A1");
        assert_eq!(type_name(&[A(1), A(1), A(1)]), "A1^3");
        assert_eq!(type_name(&[]), "1");
        assert_eq!(type_name_ascii(&[AffB(8)]), "~B8");
    }
}
