use hyperlat::exact::gauss::GaussInt;
use hyperlat::exact::matrix::{adjoint, conj_matrix, det_int, int_matrix, inverse_gauss, GaussMatrix};
use hyperlat::exact::normal_form::hnf_basis;
use hyperlat::gaussian::{
    fixed_lattice, gram_of_basis, group_generated, invariant_pair, make_involution, named, named_involution,
    projective_roots, reduce_mod_one_plus_i, tetraflection, to_real,
};
use hyperlat::zlattice::{build_z, decide_isomorphic, verify_base_change, ZLattice};
use num_bigint::BigInt;
use num_traits::{Pow, Signed};

fn g(a: i64, b: i64) -> GaussInt {
    GaussInt::new(a, b)
}

#[test]
fn lambda2_projective_roots() {
    let roots = projective_roots(&named::lambda2()).unwrap();
    let expected = vec![
        vec![g(0, 0), g(1, 0)],
        vec![g(1, 0), g(0, -1)],
        vec![g(1, 0), g(0, 0)],
        vec![g(1, 0), g(1, -1)],
        vec![g(1, 0), g(1, 0)],
        vec![g(1, 1), g(1, 0)],
    ];
    let mut e = expected;
    e.sort();
    assert_eq!(roots, e);
}

#[test]
fn lambda2_tetraflection_group_has_order_96() {
    let l = named::lambda2();
    let gens: Vec<GaussMatrix> = projective_roots(&l).unwrap().iter().map(|r| tetraflection(&l, r).unwrap()).collect();
    assert_eq!(group_generated(&gens, 10_000).unwrap().len(), 96);
}

#[test]
fn realifications() {
    // Λ1,1 is U ⊕ U(2) by 2-elementary invariants
    let z = named::lambda11().realify();
    assert!(decide_isomorphic(&z, &build_z("U+U(2)").unwrap()).is_isomorphic());
    let z2 = named::lambda2().realify();
    let d4 = build_z("D4").unwrap();
    assert_eq!(z2.summary(), d4.summary());
    assert!(decide_isomorphic(&z2, &d4).is_isomorphic());
}

#[test]
fn conjugation_witness() {
    let n = named::conj_witness();
    for l in [named::lambda2(), named::lambda11()] {
        assert!(l.is_unitary(&n));
    }
    let nbar_inv = inverse_gauss(&conj_matrix(&n)).unwrap();
    let lhs = n.mul_mat(&named::m2()).mul_mat(&nbar_inv);
    assert_eq!(lhs, named::m2().scale(&GaussInt::i()));
}

#[test]
fn lambda12_base_change() {
    let b = named::lambda12_base_change();
    let l = named::lambda12();
    let target = named::sum(&[named::rank_one(-2), named::lambda11()], "t");
    assert_eq!(adjoint(&b).mul_mat(&l.gram).mul_mat(&b), target.gram);
    let bbar_inv = inverse_gauss(&conj_matrix(&b)).unwrap();
    let m = hyperlat::exact::matrix::Matrix::block_diag(&[named::m1(), named::m2()]);
    assert_eq!(b.mul_mat(&m).mul_mat(&bbar_inv), named::m3());
}

#[test]
fn e7_basis_gram() {
    let b = named::e7_basis();
    let l = named::lambda16();
    let gram = adjoint(&b).mul_mat(&l.gram).mul_mat(&b);
    println!("{gram}");
    assert!(inverse_gauss(&b).is_some());
}

fn iso(a: &ZLattice, expr: &str) -> bool {
    decide_isomorphic(a, &build_z(expr).unwrap()).is_isomorphic()
}

#[test]
fn fixed_blocks_match_printed_bases() {
    let cases = [
        ("psi1", "(-2)", named::rank_one(-2), "A1"),
        ("ipsi1", "(-2)", named::rank_one(-2), "A1(2)"),
        ("psi2", "L2", named::lambda2(), "A1^2"),
        ("psi2", "L11", named::lambda11(), "U(2)"),
        ("psi2'", "L2", named::lambda2(), "A1+A1(2)"),
        ("psi2'", "L11", named::lambda11(), "A1(2)+(2)"),
        ("psi4", "L2^2", named::sum(&[named::lambda2(), named::lambda2()], "L2^2"), "D4(2)"),
    ];
    for (inv, lat, l, expected) in cases {
        let chi = make_involution(&l, inv).unwrap();
        let f = fixed_lattice(&chi).unwrap();
        assert!(iso(&f.zlat, expected), "{inv} on {lat}: {}", f.zlat.gram);
        let b = named::printed_fixed_basis(inv, lat).unwrap();
        // columns are fixed by x -> M x̄
        assert_eq!(chi.m.mul_mat(&conj_matrix(&b)), b, "{inv} {lat}");
        let bz = hyperlat::exact::matrix::Matrix::from_cols(b.to_cols().iter().map(|c| to_real(c)).collect());
        assert_eq!(hnf_basis(&bz), f.real_basis, "{inv} {lat} spans a different lattice");
        let g = gram_of_basis(&l, &b).unwrap();
        assert!(iso(&ZLattice::new("b", g).unwrap(), expected));
    }
}

#[test]
fn simplifying_isomorphisms() {
    assert!(iso(&build_z("(4)+A1").unwrap(), "(2)+A1(2)"));
    assert!(iso(&build_z("U(2)+A1").unwrap(), "(2)+A1^2"));
    assert!(iso(&build_z("(2)+A1(2)+D4(2)").unwrap(), "(2)+A1^2+A1(2)^3"));
    let b2 = int_matrix(&[&[1, -1], &[-1, 2]]);
    let src = build_z("(4)+A1").unwrap();
    assert!(verify_base_change(&src, &b2, &build_z("(2)+A1(2)").unwrap()).unwrap());
    let b6 = int_matrix(&[
        &[3, 2, 1, 0, 1, 1],
        &[-1, 0, -1, 1, -1, -1],
        &[-1, 0, 0, -1, 0, 0],
        &[-1, -1, 0, 0, 0, -1],
        &[-1, -1, 0, 0, -1, 0],
        &[-1, -1, -1, 0, 0, 0],
    ]);
    let src = build_z("(2)+A1^2+A1(2)^3").unwrap();
    let g = src.gram.congruent(&b6);
    assert!(iso(&ZLattice::new("t", g).unwrap(), "(2)+A1(2)+D4(2)"));
    assert_eq!(det_int(&b6).abs(), 1.into());
}

#[test]
fn three_classes_on_lambda12() {
    let rows = [
        ("psi2+psi1", "(2)+A1^2", "(2)+A1+A1(2)"),
        ("psi3", "(2)+A1^2", "U(2)+A1(2)"),
        ("psi2'+psi1", "(2)+A1+A1(2)", "(2)+A1(2)^2"),
    ];
    let mut keys = Vec::new();
    for (spec, a, b) in rows {
        let chi = make_involution(&named::lambda12(), spec).unwrap();
        let fa = fixed_lattice(&chi).unwrap();
        let fb = fixed_lattice(&chi.times_i()).unwrap();
        assert!(iso(&fa.zlat, a), "{spec}: {}", fa.zlat.gram);
        assert!(iso(&fb.zlat, b), "i{spec}: {}", fb.zlat.gram);
        keys.push(invariant_pair(&chi).unwrap().unordered());
    }
    assert_ne!(keys[0], keys[1]);
    assert_ne!(keys[0], keys[2]);
    assert_ne!(keys[1], keys[2]);
    assert!(decide_isomorphic(&build_z("(2)+A1+A1(2)").unwrap(), &build_z("U(2)+A1(2)").unwrap()).is_distinct());
}

#[test]
fn twelve_fixed_lattices() {
    let rows = [
        ("chi1", "(2)+A1^6", 7, "(2)+A1^5+A1(2)", 8),
        ("chi2", "(2)+A1^5+A1(2)", 8, "(2)+A1^4+A1(2)^2", 9),
        ("chi3", "(2)+A1^4+A1(2)^2", 9, "(2)+A1^3+A1(2)^3", 10),
        ("chi4", "(2)+A1^3+A1(2)^3", 10, "(2)+A1^2+A1(2)^4", 11),
        ("chi5", "(2)+A1^2+D4(2)", 9, "(2)+A1^3+A1(2)^3", 10),
        ("chi6", "(2)+A1^2+D4(2)", 9, "U(2)+A1(2)+D4(2)", 10),
    ];
    let mut keys = Vec::new();
    for (name, a, da, b, db) in rows {
        let chi = named_involution(name).unwrap();
        let fa = fixed_lattice(&chi).unwrap().zlat;
        let fb = fixed_lattice(&chi.times_i()).unwrap().zlat;
        assert!(iso(&fa, a), "{name}: {}", fa.gram);
        assert!(iso(&fb, b), "i{name}: {}", fb.gram);
        assert_eq!(fa.det().abs(), BigInt::from(2).pow(da as u32));
        assert_eq!(fb.det().abs(), BigInt::from(2).pow(db as u32));
        keys.push(invariant_pair(&chi).unwrap().unordered());
    }
    for i in 0..keys.len() {
        for j in i + 1..keys.len() {
            assert_ne!(keys[i], keys[j], "chi{} vs chi{}", i + 1, j + 1);
        }
    }
    // χ5 and χ6 reduce to the same class mod 1+i; the pair of fixed lattices separates them
    let halves = |k: usize| {
        let chi = named_involution(&format!("chi{k}")).unwrap();
        fixed_lattice(&chi.times_i()).unwrap().zlat
    };
    assert!(decide_isomorphic(&halves(5), &halves(6)).is_distinct());
}

#[test]
fn reductions_mod_one_plus_i() {
    let dims = [7, 6, 5, 4, 5, 5];
    let mut mats = Vec::new();
    for (k, d) in dims.iter().enumerate() {
        let chi = named_involution(&format!("chi{}", k + 1)).unwrap();
        let r = reduce_mod_one_plus_i(&chi.lattice, &chi.m).unwrap();
        assert!(r.preserves_form);
        assert_eq!(r.fixed_dim, *d, "chi{}", k + 1);
        mats.push(r.matrix);
    }
}
