//! Fixed lattices, base changes and K3 eigenlattices.

use num_bigint::BigInt;
use num_traits::{Pow, Signed};
use serde_json::{json, Value};

use super::data::{self, load};
use super::{check, matrix_json, CheckRecord};
use crate::error::Result;
use crate::exact::matrix::{adjoint, conj_matrix, det_int, inverse_gauss, IntMatrix, Matrix};
use crate::exact::normal_form::hnf_basis;
use crate::gaussian::{
    build_gaussian, fixed_lattice, gram_of_basis, group_generated, invariant_pair, make_involution, max_closure, named,
    named_involution, projective_roots, tetraflection, to_real,
};
use crate::zlattice::{
    build_z, decide_isomorphic, joint_eigenlattice, k3_lattice, k3_real_topological_type, minus_one_on_span,
    verify_base_change, ZLattice,
};

fn iso_json(l: &ZLattice, expr: &str) -> Result<(Value, bool)> {
    let d = decide_isomorphic(l, &build_z(expr)?);
    Ok((json!(format!("{d:?}")), d.is_isomorphic()))
}

pub(crate) fn fixed_blocks(out: &mut Vec<CheckRecord>) {
    let d: data::FixedBlocks = load(include_str!("../../data/fixed_blocks.json"));
    for row in &d.rows {
        let id = format!("fixed-blocks/{} on {}", row.involution, row.lattice);
        let expected = json!({ "fixed": row.fixed, "basis": row.basis });
        check(out, id, &d.anchor, expected, || {
            let l = build_gaussian(&row.lattice)?;
            let chi = make_involution(&l, &row.involution)?;
            let f = fixed_lattice(&chi)?;
            let (decision, iso) = iso_json(&f.zlat, &row.fixed)?;
            let b = data::gauss_rows(&row.basis)?;
            let fixed_columns = chi.m.mul_mat(&conj_matrix(&b)) == b;
            let bz = Matrix::from_cols(b.to_cols().iter().map(|c| to_real(c)).collect());
            let spans = hnf_basis(&bz) == f.real_basis;
            let (basis_decision, basis_iso) = iso_json(&ZLattice::new("B", gram_of_basis(&l, &b)?)?, &row.fixed)?;
            let computed = json!({
                "fixed_gram": matrix_json(&f.zlat.gram),
                "decision": decision,
                "basis_columns_fixed": fixed_columns,
                "basis_spans_fixed_lattice": spans,
                "basis_gram_decision": basis_decision,
            });
            Ok((computed, iso && fixed_columns && spans && basis_iso))
        });
    }
}

pub(crate) fn base_change(out: &mut Vec<CheckRecord>) {
    let d: data::BaseChanges = load(include_str!("../../data/base_change.json"));
    for row in &d.explicit {
        let id = format!("base-change/{} to {}", row.source, row.target);
        check(out, id, &d.anchor, json!({ "target": row.target, "unimodular": true }), || {
            let src = build_z(&row.source)?;
            let tgt = build_z(&row.target)?;
            let b = data::int_rows(&row.matrix);
            let image = src.gram.congruent(&b);
            let unimodular = det_int(&b).abs() == BigInt::from(1);
            // exact when the target Gram uses the same basis, otherwise up to isometry
            let exact = verify_base_change(&src, &b, &tgt)?;
            let (decision, iso) = iso_json(&ZLattice::new("BtGB", image.clone())?, &row.target)?;
            let computed = json!({
                "BtGB": matrix_json(&image),
                "unimodular": unimodular,
                "equals_target_gram": exact,
                "decision": decision,
            });
            Ok((computed, unimodular && (exact || iso)))
        });
    }
    for row in &d.by_invariants {
        let id = format!("base-change/{} to {} by invariants", row.source, row.target);
        check(out, id, &d.anchor, json!({ "invariants": row.invariants }), || {
            let inv = |e: &str| -> Result<Option<[i64; 4]>> {
                Ok(build_z(e)?
                    .two_elementary_invariants()
                    .map(|t| [t.r_plus as i64, t.r_minus as i64, t.a as i64, t.delta as i64]))
            };
            let (a, b) = (inv(&row.source)?, inv(&row.target)?);
            let pass = a == Some(row.invariants) && b == Some(row.invariants);
            Ok((json!({ "source": a, "target": b }), pass))
        });
    }
}

pub(crate) fn fixed_lattices(out: &mut Vec<CheckRecord>) {
    let d: data::FixedLattices = load(include_str!("../../data/fixed_lattices.json"));
    let mut keys = Vec::new();
    for row in &d.rows {
        for (times_i, expr, log2) in [(false, &row.fixed, row.log2_det), (true, &row.fixed_i, row.log2_det_i)] {
            let name = if times_i { format!("i{}", row.involution) } else { row.involution.clone() };
            let id = format!("fixed-lattices/{name}");
            check(out, id, &d.anchor, json!({ "fixed": expr, "det": format!("2^{log2}") }), || {
                let chi = named_involution(&name)?;
                let f = fixed_lattice(&chi)?.zlat;
                let (decision, iso) = iso_json(&f, expr)?;
                let det = f.det().abs();
                let det_ok = det == BigInt::from(2).pow(log2);
                Ok((
                    json!({ "gram": matrix_json(&f.gram), "decision": decision, "abs_det": det.to_string() }),
                    iso && det_ok,
                ))
            });
        }
        keys.push((row.involution.clone(), named_involution(&row.involution).and_then(|c| invariant_pair(&c))));
    }
    let anchor = d.anchor.clone();
    check(out, "fixed-lattices/unordered pairs distinct".into(), &anchor, json!("pairwise distinct"), || {
        let mut pairs = Vec::new();
        for (name, k) in &keys {
            pairs.push((name.clone(), k.as_ref().map_err(Clone::clone)?.unordered()));
        }
        let mut clashes = Vec::new();
        for i in 0..pairs.len() {
            for j in i + 1..pairs.len() {
                if pairs[i].1 == pairs[j].1 {
                    clashes.push(format!("{} = {}", pairs[i].0, pairs[j].0));
                }
            }
        }
        Ok((json!({ "equal_pairs": clashes }), clashes.is_empty()))
    });
    check(
        out,
        "fixed-lattices/chi5 vs chi6 by half-scale parity".into(),
        &anchor,
        json!({ "ichi5": "odd", "ichi6": "even" }),
        || {
            let parity = |name: &str| -> Result<Option<String>> {
                let f = fixed_lattice(&named_involution(name)?)?.zlat;
                Ok(f.halved().map(|h| format!("{:?}", h.parity()).to_lowercase()))
            };
            let (a, b) = (parity("ichi5")?, parity("ichi6")?);
            let pass = a.as_deref() == Some("odd") && b.as_deref() == Some("even");
            Ok((json!({ "ichi5": a, "ichi6": b }), pass))
        },
    );
}

pub(crate) fn rank_three(out: &mut Vec<CheckRecord>) {
    let d: data::RankThree = load(include_str!("../../data/rank_three.json"));
    let mut keys = Vec::new();
    for row in &d.rows {
        let id = format!("rank-three/{}", row.involution);
        check(out, id, &d.anchor, json!({ "fixed": row.fixed, "fixed_i": row.fixed_i }), || {
            let l = build_gaussian(&d.lattice)?;
            let chi = make_involution(&l, &row.involution)?;
            let a = fixed_lattice(&chi)?.zlat;
            let b = fixed_lattice(&chi.times_i())?.zlat;
            let (da, ia) = iso_json(&a, &row.fixed)?;
            let (db, ib) = iso_json(&b, &row.fixed_i)?;
            Ok((json!({ "fixed": da, "fixed_i": db }), ia && ib))
        });
        keys.push(
            build_gaussian(&d.lattice)
                .and_then(|l| make_involution(&l, &row.involution))
                .and_then(|c| invariant_pair(&c)),
        );
    }
    check(out, "rank-three/pairs distinct".into(), &d.anchor, json!("pairwise distinct"), || {
        let ks: Vec<_> =
            keys.iter().map(|k| k.as_ref().map(|p| p.unordered()).map_err(Clone::clone)).collect::<Result<_>>()?;
        let distinct = (0..ks.len()).all(|i| (i + 1..ks.len()).all(|j| ks[i] != ks[j]));
        Ok((json!({ "distinct": distinct }), distinct))
    });
    check(
        out,
        "rank-three/psi3 base change".into(),
        &d.anchor,
        json!({ "form": "(-2)+L11", "conjugate": "psi1+psi2 becomes psi3" }),
        || {
            let b = named::lambda12_base_change();
            let l = named::lambda12();
            let target = named::sum(&[named::rank_one(-2), named::lambda11()], "t");
            let form_ok = adjoint(&b).mul_mat(&l.gram).mul_mat(&b) == target.gram;
            let bbar_inv = inverse_gauss(&conj_matrix(&b));
            let m = Matrix::block_diag(&[named::m1(), named::m2()]);
            let conj_ok = bbar_inv.is_some_and(|bi| b.mul_mat(&m).mul_mat(&bi) == named::m3());
            // ψ3 itself is an antiunitary involution of Λ1,2
            let valid = make_involution(&l, "psi3").is_ok();
            Ok((json!({ "form": form_ok, "conjugate": conj_ok, "psi3_valid": valid }), form_ok && conj_ok && valid))
        },
    );
}

pub(crate) fn small_gaussian(out: &mut Vec<CheckRecord>) {
    let d: data::SmallGaussian = load(include_str!("../../data/small_gaussian.json"));
    let expected = json!({ "projective_roots": d.projective_roots, "group_order": d.tetraflection_group_order });
    check(out, "small-gaussian/roots and tetraflections".into(), &d.anchor, expected, || {
        let l = build_gaussian(&d.lattice)?;
        let roots = projective_roots(&l)?;
        let gens: Result<Vec<_>> = roots.iter().map(|r| tetraflection(&l, r)).collect();
        let order = group_generated(&gens?, max_closure())?.len();
        let pass = roots.len() == d.projective_roots && order == d.tetraflection_group_order;
        Ok((json!({ "projective_roots": roots.len(), "group_order": order }), pass))
    });
}

fn invariants_of(l: &ZLattice) -> Option<[i64; 4]> {
    l.two_elementary_invariants().map(|t| [t.r_plus as i64, t.r_minus as i64, t.a as i64, t.delta as i64])
}

fn place(m: &mut IntMatrix, at: usize, block: &IntMatrix) {
    for i in 0..block.rows() {
        for j in 0..block.cols() {
            m[(at + i, at + j)] = block[(i, j)].clone();
        }
    }
}

fn swap_blocks(m: &mut IntMatrix, a: usize, b: usize, len: usize, sign: i64) {
    for k in 0..len {
        m[(a + k, b + k)] = BigInt::from(sign);
        m[(b + k, a + k)] = BigInt::from(sign);
    }
}

/// `τ = -1 ⊕ swap(U,U) ⊕ u ⊕ u` on `U^3 ⊕ E8^2`.
fn k3_tau(u: &IntMatrix) -> IntMatrix {
    let mut t = IntMatrix::zeros(22, 22);
    place(&mut t, 0, &IntMatrix::identity(2).neg());
    swap_blocks(&mut t, 2, 4, 2, 1);
    place(&mut t, 6, u);
    place(&mut t, 14, u);
    t
}

/// `χ = -1 ⊕ ±swap(U,U) ⊕ swap(E8,E8)`.
fn k3_chi(u_sign: i64) -> IntMatrix {
    let mut c = IntMatrix::zeros(22, 22);
    place(&mut c, 0, &IntMatrix::identity(2).neg());
    swap_blocks(&mut c, 2, 4, 2, u_sign);
    swap_blocks(&mut c, 6, 14, 8, 1);
    c
}

pub(crate) fn k3(out: &mut Vec<CheckRecord>) {
    let d: data::K3 = load(include_str!("../../data/k3.json"));
    let l = k3_lattice();
    let u = build_z("E8").and_then(|e8| minus_one_on_span(&e8, &d.e8_subset));
    check(
        out,
        "k3/plus eigenlattice".into(),
        &d.anchor,
        json!({ "lattice": d.plus.lattice, "invariants": d.plus.invariants }),
        || {
            let tau = k3_tau(u.as_ref().map_err(Clone::clone)?);
            let plus = joint_eigenlattice(&l, &[(&tau, 1)])?;
            let (decision, iso) = iso_json(&plus, &d.plus.lattice)?;
            let inv = invariants_of(&plus);
            let named_inv = invariants_of(&build_z(&d.plus.lattice)?);
            let pass = iso && inv == Some(d.plus.invariants) && named_inv == Some(d.plus.invariants);
            Ok((json!({ "decision": decision, "invariants": inv, "named_invariants": named_inv }), pass))
        },
    );
    check(
        out,
        "k3/minus eigenlattice presentations".into(),
        &d.anchor,
        json!({ "presentations": d.minus.presentations, "invariants": d.minus.invariants }),
        || {
            let tau = k3_tau(u.as_ref().map_err(Clone::clone)?);
            let minus = joint_eigenlattice(&l, &[(&tau, -1)])?;
            let mut pass = invariants_of(&minus) == Some(d.minus.invariants);
            let mut per = serde_json::Map::new();
            for p in &d.minus.presentations {
                let z = build_z(p)?;
                let inv = invariants_of(&z);
                let iso = decide_isomorphic(&z, &minus).is_isomorphic();
                pass &= inv == Some(d.minus.invariants) && iso;
                per.insert(p.clone(), json!({ "invariants": inv, "isomorphic_to_eigenlattice": iso }));
            }
            Ok((json!({ "eigenlattice": invariants_of(&minus), "presentations": per }), pass))
        },
    );
    let e = &d.empty;
    check(
        out,
        "k3/fixed lattice of the swap involution".into(),
        &d.anchor,
        json!({ "fixed": e.fixed, "r_a_delta": e.r_a_delta, "topology": e.topology }),
        || {
            let chi = k3_chi(1);
            let fixed = joint_eigenlattice(&l, &[(&chi, 1)])?;
            let (decision, iso) = iso_json(&fixed, &e.fixed)?;
            let t = fixed.two_elementary_invariants();
            let rad = t.map(|t| [(t.r_plus + t.r_minus) as i64, t.a as i64, t.delta as i64]);
            let topo = rad.map(|[r, a, dl]| k3_real_topological_type(r, a, dl as u8).to_string());
            let pass = iso && rad == Some(e.r_a_delta) && topo.as_deref() == Some(e.topology.as_str());
            Ok((json!({ "decision": decision, "r_a_delta": rad, "topology": topo }), pass))
        },
    );
    check(
        out,
        "k3/restrictions to the eigenlattices".into(),
        &d.anchor,
        json!({ "minus": e.minus_restriction, "plus": e.plus_restriction }),
        || {
            let tau = k3_tau(u.as_ref().map_err(Clone::clone)?);
            let restrict = |sign: i64| -> Result<(Value, bool)> {
                let chi = k3_chi(sign);
                let commutes = tau.mul_mat(&chi) == chi.mul_mat(&tau);
                let fixed = joint_eigenlattice(&l, &[(&chi, 1)])?;
                let fixed_ok = decide_isomorphic(&fixed, &build_z(&e.fixed)?).is_isomorphic();
                let minus = joint_eigenlattice(&l, &[(&tau, -1), (&chi, 1)])?;
                let plus = joint_eigenlattice(&l, &[(&tau, 1), (&chi, 1)])?;
                let (dm, im) = iso_json(&minus, &e.minus_restriction)?;
                let (dp, ip) = iso_json(&plus, &e.plus_restriction)?;
                let v = json!({
                    "commutes_with_tau": commutes,
                    "fixed_is_expected": fixed_ok,
                    "minus_rank": minus.rank(), "minus": dm,
                    "plus_rank": plus.rank(), "plus": dp,
                });
                Ok((v, commutes && fixed_ok && im && ip))
            };
            // as printed, and with the sign of the U-swap block reversed
            let (printed, printed_ok) = restrict(1)?;
            let (flipped, flipped_ok) = restrict(-1)?;
            let computed = json!({ "as_printed": printed, "negated_u_swap": flipped });
            Ok((computed, printed_ok || flipped_ok))
        },
    );
}
