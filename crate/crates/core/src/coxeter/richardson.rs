//! Conjugacy classes of involutions in Coxeter groups via Richardson's criterion.
//!
//! Every involution is conjugate to the longest element `w_I` of a standard parabolic
//! subgroup acting as `-1` on its span; two such subsets give conjugate elements iff
//! they are linked by a chain of elementary equivalences `J = τ_K(I)`, where
//! `K = I ∪ {α}` is of finite type and `τ_K = -w_K` is a diagram symmetry of `K`.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};

use super::classify::{classify_component, components, type_name, CoxType};
use super::{mat_identity, mat_mul, CoxeterSystem};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvolutionClass {
    /// Type name, primed when several classes share a type.
    pub name: String,
    pub type_name: String,
    /// Lexicographically least member.
    pub representative: Vec<usize>,
    pub members: Vec<Vec<usize>>,
}

/// Whether `W_t` contains `-1`.
pub fn has_minus_one(t: &CoxType) -> bool {
    use CoxType::*;
    match *t {
        A(n) => n == 1,
        B(_) | E(7) | E(8) | F4 | G2 | H3 | H4 => true,
        D(n) => n % 2 == 0,
        I2(m) => m % 2 == 0,
        _ => false,
    }
}

/// The diagram involution `-w_0` of a connected finite component, in its standard ordering.
fn opposition(t: &CoxType, order: &[usize]) -> Vec<(usize, usize)> {
    use CoxType::*;
    let n = order.len();
    match *t {
        A(k) if k >= 2 => (0..n).map(|i| (order[i], order[n - 1 - i])).collect(),
        D(k) if k % 2 == 1 => vec![(order[0], order[1]), (order[1], order[0])],
        E(6) => vec![(order[2], order[4]), (order[4], order[2]), (order[3], order[5]), (order[5], order[3])],
        I2(m) if m % 2 == 1 => vec![(order[0], order[1]), (order[1], order[0])],
        _ => vec![],
    }
}

fn finite_components(sys: &CoxeterSystem, nodes: &[usize]) -> Option<Vec<(CoxType, Vec<usize>)>> {
    components(&sys.m, nodes).iter().map(|c| classify_component(&sys.m, c).filter(|(t, _)| t.is_finite())).collect()
}

/// `τ_K` as a map on nodes of `K`, or `None` if `W_K` is infinite.
pub fn tau(sys: &CoxeterSystem, k: &[usize]) -> Option<HashMap<usize, usize>> {
    let comps = finite_components(sys, k)?;
    let mut map: HashMap<usize, usize> = k.iter().map(|&x| (x, x)).collect();
    for (t, order) in &comps {
        for (a, b) in opposition(t, order) {
            map.insert(a, b);
        }
    }
    Some(map)
}

fn nodes_of(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| mask >> i & 1 == 1).collect()
}

fn mask_of(v: &[usize]) -> u32 {
    v.iter().fold(0, |a, &i| a | 1 << i)
}

fn find(p: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while p[r] != r {
        r = p[r];
    }
    let mut y = x;
    while p[y] != r {
        let nx = p[y];
        p[y] = r;
        y = nx;
    }
    r
}

/// All conjugacy classes of involutions (including the identity, class `1`).
pub fn involution_classes(sys: &CoxeterSystem) -> Result<Vec<InvolutionClass>> {
    let n = sys.rank();
    if n > 20 {
        return Err(Error::Invalid("involution classes are limited to rank 20".into()));
    }
    let mut admissible: Vec<u32> = vec![];
    let mut types: HashMap<u32, Vec<CoxType>> = HashMap::new();
    for mask in 0..(1u32 << n) {
        let nodes = nodes_of(mask, n);
        if let Some(comps) = finite_components(sys, &nodes) {
            if comps.iter().all(|(t, _)| has_minus_one(t)) {
                admissible.push(mask);
                types.insert(mask, comps.into_iter().map(|(t, _)| t).collect());
            }
        }
    }
    let index: HashMap<u32, usize> = admissible.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let mut parent: Vec<usize> = (0..admissible.len()).collect();
    for (ii, &mask) in admissible.iter().enumerate() {
        for a in 0..n {
            if mask >> a & 1 == 1 {
                continue;
            }
            let k = nodes_of(mask | 1 << a, n);
            let Some(t) = tau(sys, &k) else { continue };
            let j: Vec<usize> = nodes_of(mask, n).iter().map(|x| t[x]).collect();
            let jj = *index.get(&mask_of(&j)).ok_or_else(|| Error::Invalid("τ_K(I) is not admissible".into()))?;
            let (ra, rb) = (find(&mut parent, ii), find(&mut parent, jj));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
    }
    let mut groups: HashMap<usize, Vec<Vec<usize>>> = HashMap::new();
    for (ii, &mask) in admissible.iter().enumerate() {
        let r = find(&mut parent, ii);
        groups.entry(r).or_default().push(nodes_of(mask, n));
    }
    let mut classes: Vec<InvolutionClass> = groups
        .into_values()
        .map(|mut members| {
            members.sort();
            let representative = members[0].clone();
            let tn = type_name(&types[&mask_of(&representative)]);
            InvolutionClass { name: tn.clone(), type_name: tn, representative, members }
        })
        .collect();
    classes
        .sort_by(|a, b| (a.representative.len(), &a.representative).cmp(&(b.representative.len(), &b.representative)));
    let mut seen: HashMap<String, usize> = HashMap::new();
    for c in classes.iter_mut() {
        let k = seen.entry(c.type_name.clone()).or_insert(0);
        c.name = format!("{}{}", c.type_name, "'".repeat(*k));
        *k += 1;
    }
    Ok(classes)
}

/// Longest element of `W_I` in the integral reflection representation.
pub fn longest_element(sys: &CoxeterSystem, subset: &[usize]) -> Result<Vec<Vec<i64>>> {
    let s = sys.reflection_matrices()?;
    let n = sys.rank();
    let mut w = mat_identity(n);
    let mut steps = 0usize;
    loop {
        // ℓ(w s_i) > ℓ(w) iff w(α_i) is a positive root
        let next = subset.iter().copied().find(|&i| (0..n).all(|r| w[r][i] >= 0));
        match next {
            Some(i) => w = mat_mul(&w, &s[i]),
            None => return Ok(w),
        }
        steps += 1;
        if steps > 100_000 {
            return Err(Error::Invalid("parabolic subgroup is not finite".into()));
        }
    }
}

/// For each class, the class of `-w_I`, when the longest element of `W` is `-1`.
pub fn negation_partners(sys: &CoxeterSystem, classes: &[InvolutionClass]) -> Result<Option<Vec<usize>>> {
    let n = sys.rank();
    let all: Vec<usize> = (0..n).collect();
    let w0 = longest_element(sys, &all)?;
    let minus: Vec<Vec<i64>> = mat_identity(n).iter().map(|r| r.iter().map(|x| -x).collect()).collect();
    if w0 != minus {
        return Ok(None);
    }
    let s = sys.reflection_matrices()?;
    let reps: Vec<Vec<Vec<i64>>> =
        classes.iter().map(|c| longest_element(sys, &c.representative)).collect::<Result<_>>()?;
    let mut out = vec![];
    for c in &reps {
        let x = mat_mul(&minus, c);
        let hit = conjugacy_search(&x, &s, |y| reps.iter().position(|r| r == y))?;
        out.push(hit.ok_or_else(|| Error::Invalid("-w_I matches no class".into()))?);
    }
    Ok(Some(out))
}

/// Breadth-first search of the conjugacy class of `x` until `hit` reports a match.
fn conjugacy_search<T>(
    x: &[Vec<i64>],
    gens: &[Vec<Vec<i64>>],
    hit: impl Fn(&Vec<Vec<i64>>) -> Option<T>,
) -> Result<Option<T>> {
    let cap = crate::gaussian::max_closure();
    let mut seen: HashSet<Vec<Vec<i64>>> = HashSet::from([x.to_vec()]);
    let mut queue = VecDeque::from([x.to_vec()]);
    while let Some(y) = queue.pop_front() {
        if let Some(t) = hit(&y) {
            return Ok(Some(t));
        }
        for g in gens {
            // simple reflections are involutions: conjugate by s y s
            let z = mat_mul(&mat_mul(g, &y), g);
            if seen.insert(z.clone()) {
                if seen.len() > cap {
                    return Err(Error::ClosureCapExceeded(cap));
                }
                queue.push_back(z);
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_systems() {
        let a2 = involution_classes(&CoxeterSystem::of_type("A2").unwrap()).unwrap();
        assert_eq!(a2.len(), 2);
        assert_eq!(a2[1].members, vec![vec![0], vec![1]]);
        let b2 = involution_classes(&CoxeterSystem::of_type("B2").unwrap()).unwrap();
        let names: Vec<&str> = b2.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, vec!["1", "A1", "A1'", "B2"]);
    }

    #[test]
    fn longest_element_of_a2_swaps_simple_roots() {
        let s = CoxeterSystem::of_type("A2").unwrap();
        assert_eq!(longest_element(&s, &[0, 1]).unwrap(), vec![vec![0, -1], vec![-1, 0]]);
    }
}
