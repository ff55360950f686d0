use std::collections::{HashSet, VecDeque};

use hyperlat::coxeter::f2class::reflections_mod_2;
use hyperlat::coxeter::{
    diagram_automorphisms, diagram_from_roots, f2_class_of, finite_volume, involution_classes, negation_partners,
    render, CoxeterSystem, Format,
};
use hyperlat::exact::f2::{group_closure, F2Matrix};
use hyperlat::exact::matrix::int_matrix;
use hyperlat::gaussian::{e7_reduction, named_involution};
use proptest::prelude::*;

type M = Vec<Vec<i64>>;

fn mul(a: &M, b: &M) -> M {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}

/// Conjugacy classes of elements of order at most 2, by enumerating the whole group.
fn brute_force_involution_classes(sys: &CoxeterSystem) -> usize {
    let gens = sys.reflection_matrices().unwrap();
    let n = sys.rank();
    let id: M = (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect();
    let mut group = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id.clone()]);
    while let Some(x) = queue.pop_front() {
        for g in &gens {
            let y = mul(&x, g);
            if group.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    let invs: Vec<M> = group.iter().filter(|x| mul(x, x) == id).cloned().collect();
    let mut seen: HashSet<M> = HashSet::new();
    let mut classes = 0;
    for x in &invs {
        if seen.contains(x) {
            continue;
        }
        classes += 1;
        for g in &group {
            // g^{-1} = g^{k-1}; conjugating by all of g and its inverse covers the class
            let mut ginv = g.clone();
            while mul(&ginv, g) != id {
                ginv = mul(&ginv, g);
            }
            seen.insert(mul(&mul(g, x), &ginv));
        }
    }
    classes
}

#[test]
fn richardson_matches_brute_force_in_small_rank() {
    for (name, expected) in [("A2", 2), ("B2", 4), ("A3", 3), ("G2", 4), ("B3", 6), ("A1A1", 4)] {
        let sys = if name == "A1A1" {
            CoxeterSystem::from_edges(2, &[]).unwrap()
        } else {
            CoxeterSystem::of_type(name).unwrap()
        };
        let brute = brute_force_involution_classes(&sys);
        assert_eq!(brute, expected, "{name}");
        assert_eq!(involution_classes(&sys).unwrap().len(), brute, "{name}");
    }
}

#[test]
fn e7_involution_classes() {
    let e7 = CoxeterSystem::of_type("E7").unwrap();
    let classes = involution_classes(&e7).unwrap();
    assert_eq!(classes.len(), 10);
    let partner = negation_partners(&e7, &classes).unwrap().unwrap();
    let mut pairs: Vec<(String, String)> = (0..10)
        .filter(|&i| i < partner[i])
        .map(|i| (classes[i].name.clone(), classes[partner[i]].name.clone()))
        .collect();
    pairs.sort();
    let expected = [("1", "E7"), ("A1", "D6"), ("A1^2", "D4A1"), ("A1^3", "A1^4"), ("A1^3'", "D4")];
    assert_eq!(pairs, expected.map(|(a, b)| (a.to_string(), b.to_string())));
    // nodes {2,4,7} and {4,6,7} of the E7 diagram (chain 1..6, node 7 on node 3)
    let class_of = |s: &[usize]| classes.iter().position(|c| c.members.iter().any(|m| m == s)).unwrap();
    let a = class_of(&[1, 3, 6]);
    let b = class_of(&[3, 5, 6]);
    assert_ne!(a, b);
    assert_eq!(classes[a].name, "A1^3");
    assert_eq!(classes[b].name, "A1^3'");
}

#[test]
fn reductions_of_the_six_involutions() {
    let e7 = CoxeterSystem::of_type("E7").unwrap();
    let expected = [
        ("(1, E7)", 7),
        ("(A1, D6)", 6),
        ("(A1^2, D4A1)", 5),
        ("(A1^3, A1^4)", 4),
        ("(A1^3', D4)", 5),
        ("(A1^3', D4)", 5),
    ];
    for (k, (label, dim)) in expected.iter().enumerate() {
        let chi = named_involution(&format!("chi{}", k + 1)).unwrap();
        let (r, q) = e7_reduction(&chi.m).unwrap();
        let c = f2_class_of(&e7, &r.matrix, &q).unwrap();
        assert_eq!(c.label, *label, "chi{}", k + 1);
        assert_eq!(c.fixed_dim, *dim);
    }
}

#[test]
fn reflections_mod_two_generate_group_of_order_1451520() {
    let e7 = CoxeterSystem::of_type("E7").unwrap();
    let gens = reflections_mod_2(&e7).unwrap();
    assert_eq!(group_closure(&gens, 2_000_000).unwrap().len(), 1_451_520);
}

fn e7_chi3() -> (F2Matrix, hyperlat::exact::f2::F2QuadraticForm) {
    let chi = named_involution("chi3").unwrap();
    let (r, q) = e7_reduction(&chi.m).unwrap();
    (r.matrix, q)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]
    #[test]
    fn f2_label_is_conjugation_invariant(word in proptest::collection::vec(0usize..7, 0..12)) {
        let e7 = CoxeterSystem::of_type("E7").unwrap();
        let gens = reflections_mod_2(&e7).unwrap();
        let (g, q) = e7_chi3();
        let mut x = g;
        for &i in &word {
            x = gens[i].mul(&x).mul(&gens[i]);
        }
        let a = f2_class_of(&e7, &g, &q).unwrap();
        let b = f2_class_of(&e7, &x, &q).unwrap();
        prop_assert_eq!(a, b);
    }
}

#[test]
fn triangle_diagram_and_rendering() {
    // simple roots e1-e2, e2, e0-e1-e2 of Z_{1,2}(2)
    let g = int_matrix(&[&[-4, 2, 0], &[2, -2, 2], &[0, 2, -2]]);
    let d = diagram_from_roots(&g).unwrap();
    let c = finite_volume(&d, 2);
    assert!(c.finite_volume);
    assert_eq!(c.cusps.len(), 1);
    assert_eq!(c.cusps[0].kind, "~A1");
    assert_eq!(diagram_automorphisms(&d, false).order, 1);
    let dot = render(&d, Format::Dot);
    assert!(dot.contains("Mcircle") && dot.contains("black:black") && dot.contains("penwidth=3"));
    let empty = diagram_from_roots(&int_matrix(&[])).unwrap();
    assert_eq!(render(&empty, Format::Dot).lines().filter(|l| l.contains("--")).count(), 0);
}

#[test]
fn single_node_has_no_finite_volume() {
    let d = diagram_from_roots(&int_matrix(&[&[-2]])).unwrap();
    assert!(!finite_volume(&d, 2).finite_volume);
}
