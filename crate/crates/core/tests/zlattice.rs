use hyperlat::exact::matrix::{int_vec, IntMatrix};
use hyperlat::gaussian::named_involution;
use hyperlat::vinberg::{run_vinberg, VinbergConfig};
use hyperlat::zlattice::{build_z, decide_isomorphic, IsoDecision, TwoElementary, ZLattice};
use num_bigint::BigInt;
use proptest::prelude::*;

fn unimodular(n: usize) -> impl Strategy<Value = IntMatrix> {
    proptest::collection::vec((0..n, 0..n, -1i64..=1), 0..10).prop_map(move |ops| {
        let mut u = IntMatrix::identity(n);
        for (i, j, c) in ops {
            if i != j {
                for r in 0..n {
                    let v = &u[(r, i)] + &u[(r, j)] * c;
                    u[(r, i)] = v;
                }
            }
        }
        u
    })
}

fn congruent(l: &ZLattice, u: &IntMatrix) -> ZLattice {
    ZLattice::new("moved", l.gram.congruent(u)).unwrap()
}

#[test]
fn nikulin_invariants_of_standard_lattices() {
    let inv = |e: &str| build_z(e).unwrap().two_elementary_invariants();
    assert_eq!(inv("U+E8(2)"), Some(TwoElementary { r_plus: 1, r_minus: 9, a: 8, delta: 0 }));
    assert_eq!(inv("U+A1^2"), Some(TwoElementary { r_plus: 1, r_minus: 3, a: 2, delta: 1 }));
    assert_eq!(inv("U(2)+D4"), Some(TwoElementary { r_plus: 1, r_minus: 5, a: 4, delta: 0 }));
    assert_eq!(inv("U+A2"), None);
}

#[test]
fn decisions_need_a_reason() {
    let a = build_z("U+E8(2)").unwrap();
    assert!(decide_isomorphic(&a, &build_z("U(2)+E8(2)").unwrap()).is_distinct());
    assert!(decide_isomorphic(&a, &build_z("U+D4^2").unwrap()).is_distinct());
    assert!(decide_isomorphic(&build_z("U(2)+D4").unwrap(), &build_z("U+D4(2)").unwrap()).is_distinct());
    assert!(decide_isomorphic(&build_z("U+A1^2").unwrap(), &build_z("(2)+A1^3").unwrap()).is_distinct());
    match decide_isomorphic(&build_z("A2").unwrap(), &build_z("A1+(-6)").unwrap()) {
        IsoDecision::Distinct(_) => {}
        other => panic!("{other:?}"),
    }
}

#[test]
fn definite_search_finds_isometry() {
    let a = build_z("A1^2").unwrap();
    let b = ZLattice::from_rows("b", &[&[-2, 0], &[0, -2]]).unwrap();
    assert!(decide_isomorphic(&a, &b).is_isomorphic());
    let d4 = build_z("D4").unwrap();
    let moved = ZLattice::new(
        "d4'",
        d4.gram.congruent(&IntMatrix::from_rows(vec![
            int_vec(&[1, 1, 0, 0]),
            int_vec(&[0, 1, 0, 0]),
            int_vec(&[0, 0, 1, 1]),
            int_vec(&[0, 0, 0, 1]),
        ])),
    )
    .unwrap();
    assert!(decide_isomorphic(&d4, &moved).is_isomorphic());
}

#[test]
fn reflections_in_accepted_roots_are_isometries() {
    for expr in ["(2)+A1^3", "U+A1^2", "(2)+A1^2+D4(2)"] {
        let l = build_z(expr).unwrap();
        let run = run_vinberg(&VinbergConfig::new(l.clone()).unwrap()).unwrap();
        for r in &run.roots {
            let s = l.reflection(&r.vector).expect("root is crystallographic");
            assert_eq!(l.gram.congruent(&s), l.gram, "{expr}");
            let neg: Vec<BigInt> = r.vector.iter().map(|x| -x).collect();
            assert_eq!(s.mul_vec(&r.vector), neg);
            assert!(s.mul_mat(&s).is_identity());
        }
    }
}

#[test]
fn antiunitary_involutions_anticommute_with_i() {
    for name in ["chi1", "chi2", "chi3", "chi4", "chi5", "chi6"] {
        let chi = named_involution(name).unwrap();
        let m = chi.real_matrix();
        let rho = chi.lattice.rho();
        assert_eq!(m.mul_mat(&rho), rho.mul_mat(&m).neg(), "{name}");
        let z = chi.lattice.realify();
        assert_eq!(z.gram.congruent(&m), z.gram, "{name}");
        assert!(m.mul_mat(&m).is_identity());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Invariants do not depend on the basis, and Nikulin's theorem identifies the moved lattice.
    #[test]
    fn invariants_survive_base_change(idx in 0usize..4, seed in unimodular(10)) {
        let expr = ["U+E8(2)", "U+A1^2", "U(2)+D4", "U+A1^5"][idx];
        let l = build_z(expr).unwrap();
        let n = l.rank();
        let u = seed.select(&(0..n).collect::<Vec<_>>(), &(0..n).collect::<Vec<_>>());
        let m = congruent(&l, &u);
        prop_assert_eq!(l.summary(), m.summary());
        prop_assert!(decide_isomorphic(&l, &m).is_isomorphic());
    }

    #[test]
    fn scaling_by_two_is_undone_by_halving(idx in 0usize..3, u in unimodular(6)) {
        let expr = ["U+D4", "(2)+A1^5", "A1^2+U(2)+A1^2"][idx];
        let l = congruent(&build_z(expr).unwrap(), &u);
        prop_assert_eq!(l.scaled(2).halved().unwrap().gram, l.gram);
    }
}
