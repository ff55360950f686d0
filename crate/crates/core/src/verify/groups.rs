//! Weyl group of `E7`: involution classes and reductions modulo `1+i`.

use std::collections::{BTreeSet, HashSet};

use serde_json::json;

use super::data::{self, load};
use super::{check, CheckRecord};
use crate::coxeter::f2class::reflections_mod_2;
use crate::coxeter::{f2_class_of, involution_classes, negation_partners, CoxeterSystem};
use crate::error::{Error, Result};
use crate::exact::f2::group_closure;
use crate::gaussian::{e7_reduction, max_closure, named_involution};

pub(crate) fn reductions(out: &mut Vec<CheckRecord>) {
    let d: data::Reductions = load(include_str!("../../data/reductions.json"));
    for row in &d.rows {
        let id = format!("reductions/{}", row.involution);
        check(out, id, &d.anchor, json!({ "classes": row.classes, "fixed_dim": row.fixed_dim }), || {
            let e7 = CoxeterSystem::of_type("E7")?;
            let chi = named_involution(&row.involution)?;
            let (r, q) = e7_reduction(&chi.m)?;
            let c = f2_class_of(&e7, &r.matrix, &q)?;
            let got: BTreeSet<&String> = c.classes.iter().collect();
            let want: BTreeSet<&String> = row.classes.iter().collect();
            let pass = got == want && c.fixed_dim == row.fixed_dim && r.preserves_form;
            Ok((json!({ "classes": c.classes, "fixed_dim": c.fixed_dim, "preserves_form": r.preserves_form }), pass))
        });
    }
}

type M = Vec<Vec<i64>>;

fn mul(a: &M, b: &M) -> M {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}

/// Classes of elements with `w^2 = 1` found by listing the whole group.
fn brute_force_classes(sys: &CoxeterSystem) -> Result<usize> {
    let gens = sys.reflection_matrices()?;
    let n = sys.rank();
    let id: M = (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect();
    let mut group: HashSet<M> = HashSet::from([id.clone()]);
    let mut stack = vec![id.clone()];
    while let Some(x) = stack.pop() {
        for g in &gens {
            let y = mul(&x, g);
            if group.len() > 100_000 {
                return Err(Error::ClosureCapExceeded(100_000));
            }
            if group.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    let mut seen: HashSet<M> = HashSet::new();
    let mut classes = 0;
    for x in group.iter().filter(|x| mul(x, x) == id) {
        if seen.insert(x.clone()) {
            classes += 1;
            // conjugating by the generators reaches the whole class
            let mut stack = vec![x.clone()];
            while let Some(y) = stack.pop() {
                for g in &gens {
                    let z = mul(&mul(g, &y), g);
                    if seen.insert(z.clone()) {
                        stack.push(z);
                    }
                }
            }
        }
    }
    Ok(classes)
}

pub(crate) fn e7_classes(out: &mut Vec<CheckRecord>) {
    let d: data::E7Classes = load(include_str!("../../data/e7_classes.json"));
    let expected = json!({ "classes": d.classes, "pairs": d.pairs });
    check(out, format!("e7-classes/{} classes and negation", d.kind), &d.anchor, expected, || {
        let sys = CoxeterSystem::of_type(&d.kind)?;
        let classes = involution_classes(&sys)?;
        let partner = negation_partners(&sys, &classes)?.ok_or(Error::Invalid("-1 is not in W".into()))?;
        let mut pairs: Vec<(String, String)> = (0..classes.len())
            .filter(|&i| i < partner[i])
            .map(|i| (classes[i].name.clone(), classes[partner[i]].name.clone()))
            .collect();
        pairs.sort();
        let mut want = d.pairs.clone();
        want.sort();
        let names: Vec<&String> = classes.iter().map(|c| &c.name).collect();
        Ok((json!({ "classes": names, "pairs": pairs }), classes.len() == d.classes && pairs == want))
    });
    check(out, "e7-classes/two classes of type A1^3".into(), &d.anchor, json!(d.distinct_sets), || {
        let sys = CoxeterSystem::of_type(&d.kind)?;
        let classes = involution_classes(&sys)?;
        let mut found = serde_json::Map::new();
        let mut idx = Vec::new();
        let mut pass = true;
        for (name, nodes) in &d.distinct_sets {
            let zero_based: Vec<usize> = nodes.iter().map(|k| k - 1).collect();
            let pos = classes.iter().position(|c| c.members.contains(&zero_based));
            let got = pos.map(|p| classes[p].name.clone());
            pass &= got.as_deref() == Some(name.as_str());
            idx.push(pos);
            found.insert(name.clone(), json!(got));
        }
        pass &= idx.len() == 2 && idx[0] != idx[1];
        Ok((serde_json::Value::Object(found), pass))
    });
    for small in &d.small_ranks {
        let id = format!("e7-classes/brute force {}", small.kind);
        check(out, id, &d.anchor, json!(small.classes), || {
            let sys = CoxeterSystem::of_type(&small.kind)?;
            let fast = involution_classes(&sys)?.len();
            let brute = brute_force_classes(&sys)?;
            Ok((json!({ "richardson": fast, "enumeration": brute }), fast == small.classes && brute == small.classes))
        });
    }
}

pub(crate) fn closure(out: &mut Vec<CheckRecord>) {
    let d: data::Reductions = load(include_str!("../../data/reductions.json"));
    check(out, "closure/reflections modulo 2".into(), &d.anchor, json!(d.group_order), || {
        let gens = reflections_mod_2(&CoxeterSystem::of_type("E7")?)?;
        let order = group_closure(&gens, max_closure())?.len();
        Ok((json!(order), order == d.group_order))
    });
}
