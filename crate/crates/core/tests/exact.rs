use hyperlat::exact::enumerate::negdef_enumerate;
use hyperlat::exact::gauss::GaussInt;
use hyperlat::exact::matrix::{det_int, det_rat, int, int_matrix, to_rat_matrix, IntMatrix, Matrix};
use hyperlat::exact::normal_form::{hnf_basis, kernel_basis, smith_normal_form};
use hyperlat::exact::signature;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn matrix(rows: usize, cols: usize, range: std::ops::RangeInclusive<i64>) -> impl Strategy<Value = IntMatrix> {
    proptest::collection::vec(range, rows * cols)
        .prop_map(move |v| Matrix::from_vec(rows, cols, v.into_iter().map(BigInt::from).collect()))
}

/// Product of elementary column operations, so determinant 1.
fn unimodular(n: usize) -> impl Strategy<Value = IntMatrix> {
    proptest::collection::vec((0..n, 0..n, -2i64..=2), 0..8).prop_map(move |ops| {
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

#[test]
fn smith_of_known_matrix() {
    let a = int_matrix(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
    let s = smith_normal_form(&a);
    assert_eq!(s.invariants, vec![int(2), int(6), int(12)]);
}

#[test]
fn hnf_and_kernel() {
    // columns span the even sublattice of Z^2
    let b = int_matrix(&[&[2, 0, 2], &[0, 2, 2]]);
    let h = hnf_basis(&b);
    assert_eq!(h.cols(), 2);
    assert_eq!(det_int(&h).abs(), int(4));
    let k = kernel_basis(&b);
    assert_eq!(k.cols(), 1);
    assert!(b.mul_mat(&k).is_zero());
}

#[test]
fn gaussian_euclidean_division() {
    let a = GaussInt::new(7, 3);
    let d = GaussInt::new(2, -1);
    let (q, r) = a.div_rem_euclid(&d);
    assert_eq!(&(&q * &d) + &r, a);
    assert!(r.norm() < d.norm());
    assert!(GaussInt::one_plus_i().divides(&GaussInt::new(2, 0)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn smith_decomposition(a in matrix(3, 4, -6..=6)) {
        let s = smith_normal_form(&a);
        prop_assert_eq!(s.u.mul_mat(&a).mul_mat(&s.v), s.d.clone());
        prop_assert_eq!(det_int(&s.u).abs(), int(1));
        prop_assert_eq!(det_int(&s.v).abs(), int(1));
        for w in s.invariants.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        for i in 0..3 {
            for j in 0..4 {
                if i != j {
                    prop_assert!(s.d[(i, j)].is_zero());
                }
            }
        }
    }

    #[test]
    fn integer_and_rational_determinants_agree(a in matrix(4, 4, -5..=5)) {
        prop_assert_eq!(BigRational::from_integer(det_int(&a)), det_rat(&to_rat_matrix(&a)));
    }

    #[test]
    fn signature_is_a_congruence_invariant(d in proptest::collection::vec(-3i64..=3, 4), u in unimodular(4)) {
        let g = IntMatrix::diagonal(&d.iter().map(|&x| int(x)).collect::<Vec<_>>());
        let s = signature(&g);
        prop_assert_eq!(s, signature(&g.congruent(&u)));
        prop_assert_eq!(s.pos, d.iter().filter(|&&x| x > 0).count());
        prop_assert_eq!(s.neg, d.iter().filter(|&&x| x < 0).count());
    }

    /// Fincke-Pohst enumeration against a box search; `G <= -I` bounds every coordinate by `sqrt(t)`.
    #[test]
    fn enumeration_matches_box_search(a in matrix(3, 3, -1..=1), diag in proptest::collection::vec(1i64..=3, 3), t in 1i64..=6) {
        let ata = a.transpose().mul_mat(&a);
        let g = ata.add_mat(&IntMatrix::diagonal(&diag.iter().map(|&x| int(x)).collect::<Vec<_>>())).neg();
        let zero = vec![BigRational::zero(); 3];
        let got = negdef_enumerate(&g, &int(-t), &zero).unwrap();
        let b = (t as f64).sqrt() as i64;
        let mut want = Vec::new();
        for x in -b..=b {
            for y in -b..=b {
                for z in -b..=b {
                    let v = vec![int(x), int(y), int(z)];
                    if g.bilinear(&v, &v) == int(-t) {
                        want.push(v);
                    }
                }
            }
        }
        want.sort();
        prop_assert_eq!(got, want);
    }
}
