use hyperlat::coxeter::EdgeClass;
use hyperlat::exact::matrix::int_vec;
use hyperlat::vinberg::{crystallographic_check, run_vinberg, Status, VinbergConfig, VinbergRun};
use hyperlat::zlattice::build_z;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn run(expr: &str) -> VinbergRun {
    run_vinberg(&VinbergConfig::new(build_z(expr).unwrap()).unwrap()).unwrap()
}

#[test]
fn rank_three_triangle() {
    let r = run("(2)+A1^2");
    assert_eq!(r.status, Status::Finished);
    let heights: Vec<String> = r.roots.iter().map(|x| x.height.to_string()).collect();
    assert_eq!(heights, ["0", "0", "2"]);
    let d = r.diagram().unwrap();
    assert_eq!(d.edge(0, 1).class(), EdgeClass::Angle(4));
    assert_eq!(d.edge(1, 2).class(), EdgeClass::Parallel);
    assert_eq!(d.edge(0, 2).class(), EdgeClass::Angle(2));
}

#[test]
fn simplex_family_sizes() {
    for k in 2..=9 {
        let r = run(&format!("(2)+A1^{k}"));
        assert_eq!(r.status, Status::Finished, "k = {k}");
        assert_eq!(r.roots.len(), k + 1, "k = {k}");
        assert!(r.census.as_ref().unwrap().finite_volume);
    }
}

#[test]
fn unimodular_lattices() {
    // the even unimodular lattice of rank 10 gives the E10 diagram
    let r = run("U+E8");
    assert_eq!(r.roots.len(), 10);
    let d = r.diagram().unwrap();
    let simple_edges = (0..10)
        .flat_map(|i| (i + 1..10).map(move |j| (i, j)))
        .filter(|&(i, j)| d.edge(i, j).class() == EdgeClass::Angle(3))
        .count();
    assert_eq!(simple_edges, 9);
    assert!(r.census.unwrap().finite_volume);
}

#[test]
fn bad_controller_is_rejected() {
    let l = build_z("(2)+A1^2").unwrap();
    let config = VinbergConfig::new(l).unwrap().with_controller(int_vec(&[0, 1, 0]));
    assert!(run_vinberg(&config).is_err());
}

fn check_run(expr: &str, r: &VinbergRun) -> Result<(), TestCaseError> {
    let l = build_z(expr).unwrap();
    for (i, a) in r.roots.iter().enumerate() {
        prop_assert!(a.norm.is_negative());
        prop_assert!(crystallographic_check(&l, &a.vector).unwrap());
        prop_assert_eq!(l.ip(&a.vector, &r.controller), a.product.clone());
        prop_assert!(!a.product.is_negative());
        prop_assert_eq!(a.height.is_zero(), a.product.is_zero());
        for b in &r.roots[..i] {
            // the polyhedron is acute angled
            prop_assert!(!l.ip(&a.vector, &b.vector).is_negative());
        }
    }
    for w in r.roots.windows(2) {
        prop_assert!(w[0].height <= w[1].height);
    }
    Ok(())
}

const FAMILY: [&str; 6] = ["(2)+A1^2", "(2)+A1^3", "(2)+A1^4", "U+A1^2", "U+A2", "(2)+A1^2+D4(2)"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn accepted_roots_are_acute_and_ordered(idx in 0..FAMILY.len()) {
        check_run(FAMILY[idx], &run(FAMILY[idx]))?;
    }

    /// A height cap keeps exactly the roots of the full run up to that height.
    #[test]
    fn height_cap_gives_a_prefix(idx in 0..FAMILY.len(), num in 0i64..12, den in 1i64..4) {
        let expr = FAMILY[idx];
        let full = run(expr);
        let cap = BigRational::new(BigInt::from(num), BigInt::from(den));
        let capped = run_vinberg(&VinbergConfig::new(build_z(expr).unwrap()).unwrap().with_max_height(cap.clone())).unwrap();
        let want: Vec<_> = full.roots.iter().filter(|r| r.height <= cap).cloned().collect();
        prop_assert_eq!(&capped.roots, &want);
        if want.len() < full.roots.len() {
            prop_assert_eq!(capped.status, Status::HeightCapped);
        }
    }

    #[test]
    fn runs_are_deterministic(idx in 0..FAMILY.len()) {
        prop_assert_eq!(run(FAMILY[idx]).roots, run(FAMILY[idx]).roots);
    }
}
