//! One PASS/FAIL line per acceptance criterion.
//!
//! Criteria 1 to 12 are the check groups of `verify_paper`; criterion 13 runs
//! randomized property checks plus the order of the group generated by the
//! `E7` reflections modulo 2.

use hyperlat::exact::enumerate::negdef_enumerate;
use hyperlat::exact::gauss::GaussInt;
use hyperlat::exact::matrix::{adjoint, int, GaussMatrix, IntMatrix};
use hyperlat::gaussian::{named, named_involution, projective_roots, tetraflection, GaussianLattice};
use hyperlat::verify::verify_paper;
use hyperlat::vinberg::{run_vinberg, VinbergConfig};
use hyperlat::zlattice::{build_z, decide_isomorphic, ZLattice};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

const CRITERIA: [(&str, &str); 12] = [
    ("fixed-blocks", "fixed blocks of the rank two involutions"),
    ("base-change", "base change identities"),
    ("simplex-family", "simplex diagrams of (2)+A1^n"),
    ("trace", "roots of (2)+A1^2+D4(2) level by level"),
    ("fixed-diagrams", "diagrams of the fixed lattices"),
    ("fixed-lattices", "fixed lattices of the twelve involutions"),
    ("rank-three", "involutions of the rank three lattice"),
    ("reductions", "reductions modulo 1+i"),
    ("small-gaussian", "roots and tetraflections of the rank two lattice"),
    ("chamber", "chamber of the rank seven lattice"),
    ("k3", "K3 spot checks"),
    ("e7-classes", "involution classes of W(E7)"),
];

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

fn runner() -> TestRunner {
    TestRunner::new(Config { cases: 32, failure_persistence: None, ..Config::default() })
}

fn report(name: &str, r: Result<(), String>) -> bool {
    if let Err(e) = &r {
        println!("    {name}: {e}");
    }
    r.is_ok()
}

fn reflections_preserve_form() -> Result<(), String> {
    let lattices = ["(2)+A1^3", "U+A1^2", "(2)+A1^2+D4(2)", "U+E8(2)"];
    let runs: Vec<_> = lattices
        .iter()
        .map(|e| {
            let l = build_z(e).unwrap();
            let roots = run_vinberg(&VinbergConfig::new(l.clone()).unwrap()).unwrap().roots;
            (l, roots)
        })
        .collect();
    let strat =
        (0..runs.len(), 0usize..64, proptest::collection::vec(-5i64..=5, 10), proptest::collection::vec(-5i64..=5, 10));
    runner()
        .run(&strat, |(i, k, x, y)| {
            let (l, roots) = &runs[i];
            let n = l.rank();
            let r = &roots[k % roots.len()].vector;
            let s = l.reflection(r).expect("crystallographic");
            let x: Vec<BigInt> = x[..n].iter().map(|&v| int(v)).collect();
            let y: Vec<BigInt> = y[..n].iter().map(|&v| int(v)).collect();
            prop_assert_eq!(l.ip(&s.mul_vec(&x), &s.mul_vec(&y)), l.ip(&x, &y));
            Ok(())
        })
        .map_err(|e| e.to_string())
}

fn gauss_vec(v: &[(i64, i64)]) -> Vec<GaussInt> {
    v.iter().map(|&(a, b)| GaussInt::new(a, b)).collect()
}

fn tetraflections_preserve_form() -> Result<(), String> {
    let lattices: Vec<GaussianLattice> =
        vec![named::lambda2(), named::sum(&[named::lambda2(), named::rank_one(-2)], "Λ2+(-2)")];
    let gens: Vec<Vec<(Vec<GaussInt>, GaussMatrix)>> = lattices
        .iter()
        .map(|l| projective_roots(l).unwrap().into_iter().map(|r| (r.clone(), tetraflection(l, &r).unwrap())).collect())
        .collect();
    let entry = (-4i64..=4, -4i64..=4);
    let strat = (
        0..lattices.len(),
        0usize..64,
        proptest::collection::vec(entry.clone(), 3),
        proptest::collection::vec(entry, 3),
    );
    runner()
        .run(&strat, |(i, k, x, y)| {
            let l = &lattices[i];
            let n = l.rank();
            let (r, t) = &gens[i][k % gens[i].len()];
            prop_assert_eq!(adjoint(t).mul_mat(&l.gram).mul_mat(t), l.gram.clone());
            prop_assert_eq!(t.mul_vec(r), r.iter().map(|z| z.mul_i()).collect::<Vec<_>>());
            prop_assert!(t.pow(4).is_identity());
            let (x, y) = (gauss_vec(&x[..n]), gauss_vec(&y[..n]));
            prop_assert_eq!(l.h(&t.mul_vec(&x), &t.mul_vec(&y)), l.h(&x, &y));
            Ok(())
        })
        .map_err(|e| e.to_string())
}

fn involutions_anticommute() -> Result<(), String> {
    for j in 1..=6 {
        for name in [format!("chi{j}"), format!("ichi{j}")] {
            let chi = named_involution(&name).map_err(|e| e.to_string())?;
            let m = chi.real_matrix();
            let rho = chi.lattice.rho();
            if m.mul_mat(&rho) != rho.mul_mat(&m).neg() {
                return Err(format!("{name} does not anticommute with i"));
            }
        }
    }
    Ok(())
}

fn nikulin_invariance() -> Result<(), String> {
    let exprs = ["U+E8(2)", "U+A1^2", "U(2)+D4", "(2)+A1^7"];
    runner()
        .run(&(0..exprs.len(), unimodular(10)), |(i, u)| {
            let l = build_z(exprs[i]).unwrap();
            let n = l.rank();
            let idx: Vec<usize> = (0..n).collect();
            let moved = ZLattice::new("moved", l.gram.congruent(&u.select(&idx, &idx))).unwrap();
            prop_assert_eq!(l.two_elementary_invariants(), moved.two_elementary_invariants());
            prop_assert!(decide_isomorphic(&l, &moved).is_isomorphic());
            Ok(())
        })
        .map_err(|e| e.to_string())
}

fn enumeration_oracle() -> Result<(), String> {
    let strat =
        (2usize..=4, proptest::collection::vec(-1i64..=1, 16), proptest::collection::vec(1i64..=3, 4), 1i64..=5);
    runner()
        .run(&strat, |(n, a, diag, t)| {
            let a = IntMatrix::from_vec(n, n, a[..n * n].iter().map(|&x| int(x)).collect());
            let d = IntMatrix::diagonal(&diag[..n].iter().map(|&x| int(x)).collect::<Vec<_>>());
            // G <= -I, so every coordinate is at most sqrt(t) in absolute value
            let g = a.transpose().mul_mat(&a).add_mat(&d).neg();
            let got = negdef_enumerate(&g, &int(-t), &vec![BigRational::zero(); n]).unwrap();
            let b = (t as f64).sqrt() as i64;
            let side = (2 * b + 1) as usize;
            let mut want = Vec::new();
            for code in 0..side.pow(n as u32) {
                let mut c = code;
                let v: Vec<BigInt> = (0..n)
                    .map(|_| {
                        let x = (c % side) as i64 - b;
                        c /= side;
                        int(x)
                    })
                    .collect();
                if g.bilinear(&v, &v) == int(-t) {
                    want.push(v);
                }
            }
            want.sort();
            prop_assert_eq!(got, want);
            Ok(())
        })
        .map_err(|e| e.to_string())
}

fn closure() -> Result<(), String> {
    let r = verify_paper(&["closure".to_string()]).map_err(|e| e.to_string())?;
    if r.pass {
        Ok(())
    } else {
        Err(format!("computed {}", r.records[0].computed))
    }
}

fn main() {
    let mut all = true;
    for (k, (group, title)) in CRITERIA.iter().enumerate() {
        let (pass, detail) = match verify_paper(&[group.to_string()]) {
            Ok(r) => {
                let failed: Vec<String> = r.records.iter().filter(|c| !c.pass).map(|c| c.id.clone()).collect();
                (r.pass, if failed.is_empty() { format!("{} checks", r.records.len()) } else { failed.join(", ") })
            }
            Err(e) => (false, e.to_string()),
        };
        all &= pass;
        println!("{} {:>2} {title} ({detail})", if pass { "PASS" } else { "FAIL" }, k + 1);
    }
    let props = [
        ("reflections preserve the form", reflections_preserve_form()),
        ("tetraflections preserve the form", tetraflections_preserve_form()),
        ("antiunitary involutions anticommute with i", involutions_anticommute()),
        ("Nikulin invariants under unimodular congruence", nikulin_invariance()),
        ("enumeration against box search", enumeration_oracle()),
        ("reflections modulo 2 generate 1451520 elements", closure()),
    ];
    let mut pass13 = true;
    for (name, r) in props {
        pass13 &= report(name, r);
    }
    all &= pass13;
    println!("{} 13 property suites and closure", if pass13 { "PASS" } else { "FAIL" });
    if !all {
        std::process::exit(1);
    }
}
