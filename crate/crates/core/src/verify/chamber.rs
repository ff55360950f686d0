//! The chamber of the fixed lattice `(2) ⊕ A1^6` cut out by Gaussian roots.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use super::data::{self, load};
use super::diagrams::finished;
use super::{check, CheckRecord};
use crate::coxeter::automorphism::compose;
use crate::coxeter::{diagram_automorphisms, CoxeterDiagram, EdgeClass};
use crate::error::{Error, Result};
use crate::exact::gauss::GaussInt;
use crate::exact::matrix::{GaussMatrix, IntMatrix};
use crate::exact::normal_form::kernel_basis;
use crate::gaussian::{
    build_gaussian, extends_to_gaussian, gram_of_basis, mirror_orthocomplement, primitive_gaussian_root,
    GaussianLattice, MirrorKind,
};
use crate::vinberg::{gaussian_root_predicate, run_vinberg, VinbergConfig};
use crate::zlattice::{build_z, decide_isomorphic, ZLattice};

fn chamber_data() -> data::Chamber {
    load(include_str!("../../data/chamber.json"))
}

struct Setup {
    gauss: GaussianLattice,
    basis: GaussMatrix,
    fixed: ZLattice,
    /// Labelled roots in fixed-lattice coordinates.
    roots: Vec<(String, Vec<BigInt>)>,
}

impl Setup {
    fn new(d: &data::Chamber) -> Result<Self> {
        let gauss = build_gaussian(&d.lattice)?;
        let basis = data::gauss_rows(&d.basis)?;
        let fixed = ZLattice::new("B1", gram_of_basis(&gauss, &basis)?)?;
        let roots = d.roots.iter().map(|r| (r.label.clone(), data::int_vector(&r.vector))).collect();
        Ok(Setup { gauss, basis, fixed, roots })
    }

    fn index(&self, label: &str) -> Result<usize> {
        self.roots.iter().position(|(l, _)| l == label).ok_or_else(|| Error::UnknownName(label.to_string()))
    }

    fn diagram(&self) -> Result<CoxeterDiagram> {
        let cols: Vec<Vec<BigInt>> = self.roots.iter().map(|r| r.1.clone()).collect();
        let gram = self.fixed.gram.congruent(&IntMatrix::from_cols(cols));
        CoxeterDiagram::new(self.roots.iter().map(|r| r.0.clone()).collect(), gram)
    }

    /// Product of reflections, leftmost first.
    fn product(&self, vectors: &[Vec<i64>]) -> Result<IntMatrix> {
        let n = self.fixed.rank();
        vectors.iter().try_fold(IntMatrix::identity(n), |acc, v| {
            let r = self.fixed.reflection(&data::int_vector(v)).ok_or_else(|| Error::NotARoot(format!("{v:?}")))?;
            Ok(acc.mul_mat(&r))
        })
    }

    /// Permutation of the labelled roots induced by `m`, if it preserves them.
    fn permutation(&self, m: &IntMatrix) -> Option<Vec<usize>> {
        self.roots.iter().map(|(_, v)| self.roots.iter().position(|(_, w)| *w == m.mul_vec(v))).collect()
    }

    fn gaussian_root(&self, v: &[BigInt]) -> Result<Vec<GaussInt>> {
        let vg: Vec<GaussInt> = v.iter().map(|x| GaussInt::from_int(x.clone())).collect();
        primitive_gaussian_root(&self.gauss, &self.basis.mul_vec(&vg))
    }

    /// `r^⊥` inside the fixed lattice.
    fn orthocomplement(&self, v: &[BigInt]) -> Result<ZLattice> {
        let row = IntMatrix::from_rows(vec![self.fixed.gram.mul_vec(v)]);
        let k = kernel_basis(&row);
        ZLattice::new("r^⊥", self.fixed.gram.congruent(&k))
    }
}

fn order_of(m: &IntMatrix) -> Option<usize> {
    let mut p = m.clone();
    for k in 1..=64 {
        if p.is_identity() {
            return Some(k);
        }
        p = p.mul_mat(m);
    }
    None
}

fn closure_order(gens: &[Vec<usize>]) -> usize {
    let n = gens.first().map_or(0, Vec::len);
    let id: Vec<usize> = (0..n).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::from([id.clone()]);
    let mut stack = vec![id];
    while let Some(p) = stack.pop() {
        for g in gens {
            let q = compose(g, &p);
            if seen.insert(q.clone()) {
                stack.push(q);
            }
        }
    }
    seen.len()
}

fn label_pairs(pairs: &[(String, String)]) -> BTreeSet<(String, String)> {
    pairs.iter().map(|(a, b)| if a <= b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) }).collect()
}

fn point(a: &BigRational, b: &BigRational) -> Vec<BigRational> {
    let two = BigRational::from_integer(2.into());
    let x0 = -(&two * b) - a;
    let mut x = vec![x0];
    for _ in 0..3 {
        x.push(b.clone());
        x.push(a.clone());
    }
    x
}

fn rat_vec(v: &[BigInt]) -> Vec<BigRational> {
    v.iter().map(|x| BigRational::from_integer(x.clone())).collect()
}

/// Inner products of `(-2b-a, b, a, b, a, b, a)` with the thirteen labelled roots.
pub fn segment_inner_products(a: &BigRational, b: &BigRational) -> Vec<(String, BigRational)> {
    let d = chamber_data();
    let setup = Setup::new(&d).expect("bundled chamber data is consistent");
    let x = point(a, b);
    let gram = setup.fixed.gram.map(|e| BigRational::from_integer(e.clone()));
    setup.roots.iter().map(|(l, v)| (l.clone(), gram.bilinear(&x, &rat_vec(v)))).collect()
}

fn parse_linear(s: &str, a: &BigRational, b: &BigRational) -> Result<BigRational> {
    Ok(match s {
        "-a" => -a.clone(),
        "-b" => -b.clone(),
        "a-b" => a - b,
        _ => return Err(Error::Parse(format!("segment value '{s}'"))),
    })
}

pub(crate) fn chamber(out: &mut Vec<CheckRecord>) {
    let d = chamber_data();
    let setup = Setup::new(&d);
    let anchor = d.anchor.clone();
    let with = |f: &dyn Fn(&Setup) -> Result<(Value, bool)>| -> Result<(Value, bool)> {
        f(setup.as_ref().map_err(Clone::clone)?)
    };

    let expected_roots: Vec<Value> = d.roots.iter().map(|r| json!([r.label, r.height, r.vector])).collect();
    check(out, "chamber/roots".into(), &anchor, json!({ "fixed": d.fixed, "roots": expected_roots }), || {
        with(&|s| {
            let fixed_ok = decide_isomorphic(&s.fixed, &build_z(&d.fixed)?).is_isomorphic();
            let pred = gaussian_root_predicate(&s.gauss, &s.basis)?;
            let config = VinbergConfig::new(s.fixed.clone())?
                .with_controller(data::int_vector(&d.controller))
                .with_predicate(pred);
            let run = run_vinberg(&config)?;
            finished(&run)?;
            let mut found: BTreeMap<String, BTreeSet<Vec<BigInt>>> = BTreeMap::new();
            for r in &run.roots {
                found.entry(r.height.to_string()).or_default().insert(r.vector.clone());
            }
            let mut want: BTreeMap<String, BTreeSet<Vec<BigInt>>> = BTreeMap::new();
            for r in &d.roots {
                want.entry(r.height.clone()).or_default().insert(data::int_vector(&r.vector));
            }
            let computed: BTreeMap<String, Vec<Value>> =
                found.iter().map(|(h, vs)| (h.clone(), vs.iter().map(|v| super::vec_json(v)).collect())).collect();
            Ok((json!({ "fixed_is_expected": fixed_ok, "roots_by_height": computed }), fixed_ok && found == want))
        })
    });

    let expected = json!({ "double": d.double_edges, "thick": d.thick_edges });
    check(out, "chamber/edges".into(), &anchor, expected, || {
        with(&|s| {
            let dg = s.diagram()?;
            let mut double = Vec::new();
            let mut thick = Vec::new();
            let mut other = Vec::new();
            for i in 0..dg.len() {
                for j in i + 1..dg.len() {
                    let pair = (s.roots[i].0.clone(), s.roots[j].0.clone());
                    match dg.edge(i, j).class() {
                        EdgeClass::Angle(2) => {}
                        EdgeClass::Angle(4) => double.push(pair),
                        EdgeClass::Parallel => thick.push(pair),
                        c => other.push(json!([pair.0, pair.1, format!("{c:?}")])),
                    }
                }
            }
            let pass = label_pairs(&double) == label_pairs(&d.double_edges)
                && label_pairs(&thick) == label_pairs(&d.thick_edges)
                && other.is_empty();
            Ok((json!({ "double": double, "thick": thick, "other": other }), pass))
        })
    });

    check(out, "chamber/diagram symmetries".into(), &anchor, json!(d.automorphism_order), || {
        with(&|s| {
            let order = diagram_automorphisms(&s.diagram()?, false).order;
            Ok((json!(order), order == d.automorphism_order))
        })
    });

    let expected = json!({ "s": { "order": d.s.order, "fixes": d.s.fixes, "cycle": d.s.cycle },
                           "t": { "order": d.t.order, "fixes": d.t.fixes, "swaps": d.t.swaps },
                           "group_order": d.automorphism_order });
    check(out, "chamber/generators s and t".into(), &anchor, expected, || {
        with(&|s| {
            let ms = s.product(&d.s.reflections)?;
            let mt = s.product(&d.t.reflections)?;
            let (ps, pt) = match (s.permutation(&ms), s.permutation(&mt)) {
                (Some(a), Some(b)) => (a, b),
                _ => return Ok((json!({ "error": "roots not preserved" }), false)),
            };
            let img = |p: &[usize], l: &str| -> Result<String> { Ok(s.roots[p[s.index(l)?]].0.clone()) };
            let mut pass = order_of(&ms) == Some(d.s.order) && order_of(&mt) == Some(d.t.order);
            for l in d.s.fixes.iter().chain(&d.t.fixes) {
                let p = if d.s.fixes.contains(l) { &ps } else { &pt };
                pass &= img(p, l)? == *l;
            }
            let c = &d.s.cycle;
            let forward = (0..c.len()).all(|k| img(&ps, &c[k]).ok().as_ref() == Some(&c[(k + 1) % c.len()]));
            let backward = (0..c.len()).all(|k| img(&ps, &c[(k + 1) % c.len()]).ok().as_ref() == Some(&c[k]));
            pass &= forward || backward;
            pass &= img(&pt, &d.t.swaps[0])? == d.t.swaps[1] && img(&pt, &d.t.swaps[1])? == d.t.swaps[0];
            let ext_s = extends_to_gaussian(&s.gauss, &s.basis, &ms)?;
            let ext_t = extends_to_gaussian(&s.gauss, &s.basis, &mt)?;
            let group = closure_order(&[ps.clone(), pt.clone()]);
            pass &= ext_s && ext_t && group == d.automorphism_order;
            let names = |p: &[usize]| -> Vec<String> { p.iter().map(|&i| s.roots[i].0.clone()).collect() };
            let computed = json!({
                "s": { "order": order_of(&ms), "images": names(&ps), "extends": ext_s },
                "t": { "order": order_of(&mt), "images": names(&pt), "extends": ext_t },
                "group_order": group,
            });
            Ok((computed, pass))
        })
    });

    let w = &d.hyperelliptic_wall;
    check(out, "chamber/hyperelliptic wall".into(), &anchor, json!({ "root": w.root, "cycle": w.nodes }), || {
        with(&|s| {
            let dg = s.diagram()?;
            let r = s.index(&w.root)?;
            let nodes: Vec<usize> =
                (0..dg.len()).filter(|&j| j != r && dg.edge(r, j).class() == EdgeClass::Angle(2)).collect();
            let labels: BTreeSet<String> = nodes.iter().map(|&j| s.roots[j].0.clone()).collect();
            let sub = dg.subdiagram(&nodes);
            let shape = sub.shape();
            let degrees_two =
                (0..sub.len()).all(|i| shape.edges.keys().filter(|(a, b)| *a == i || *b == i).count() == 2);
            let connected = {
                let mut seen = vec![false; sub.len()];
                let mut stack = vec![0];
                while let Some(i) = stack.pop() {
                    if std::mem::replace(&mut seen[i], true) {
                        continue;
                    }
                    stack.extend((0..sub.len()).filter(|&j| j != i && shape.edge(i, j) != EdgeClass::Angle(2)));
                }
                seen.iter().all(|&b| b)
            };
            let double = shape.edges.values().all(|c| *c == EdgeClass::Angle(4));
            let want: BTreeSet<String> = w.nodes.iter().cloned().collect();
            let computed =
                json!({ "orthogonal_nodes": labels, "is_cycle": degrees_two && connected, "double_edges": double });
            Ok((computed, labels == want && degrees_two && connected && double && sub.len() == 8))
        })
    });

    let expected = json!({ "hyperelliptic": d.grey, "others": "nodal" });
    check(out, "chamber/mirror types".into(), &anchor, expected, || {
        with(&|s| {
            let mut kinds = BTreeMap::new();
            let mut pass = true;
            for (label, v) in &s.roots {
                let (_, kind) = mirror_orthocomplement(&s.gauss, &s.gaussian_root(v)?)?;
                let want = if d.grey.contains(label) { MirrorKind::Hyperelliptic } else { MirrorKind::Nodal };
                pass &= kind == want;
                kinds.insert(label.clone(), format!("{kind:?}"));
            }
            Ok((json!(kinds), pass))
        })
    });

    check(out, "chamber/orthogonal complements".into(), &anchor, json!(d.orthocomplements), || {
        with(&|s| {
            let white = build_z(&d.orthocomplements["white"])?;
            let tetra = build_z(&d.orthocomplements["tetrahedral"])?;
            let mut per = BTreeMap::new();
            let mut pass = true;
            for (label, v) in &s.roots {
                if d.grey.contains(label) {
                    continue;
                }
                let (kind, target) =
                    if d.tetrahedron.contains(label) { ("tetrahedral", &tetra) } else { ("white", &white) };
                let iso = decide_isomorphic(&s.orthocomplement(v)?, target).is_isomorphic();
                pass &= iso;
                per.insert(label.clone(), json!({ "class": kind, "isomorphic": iso }));
            }
            Ok((json!(per), pass))
        })
    });

    let seg = &d.segment;
    let expected = json!({ "point": seg.point, "cases": seg.cases.iter().map(|c| json!([c.value, c.roots])).collect::<Vec<_>>(),
                           "endpoints": seg.endpoints, "sinh2_ratio": "a^2 : b^2 : (a-b)^2/2" });
    check(out, "chamber/segment".into(), &anchor, expected, || {
        with(&|s| {
            let mut pass = true;
            let mut values = BTreeMap::new();
            // the linear forms are checked on a basis of (a, b) and two generic points
            for (a, b) in [(1, 0), (0, 1), (3, 7), (-1, -2)] {
                let (a, b) = (BigRational::from_integer(a.into()), BigRational::from_integer(b.into()));
                let products: BTreeMap<String, BigRational> = segment_inner_products(&a, &b).into_iter().collect();
                for case in &seg.cases {
                    // Gram entries are twice the drawn products
                    let want = parse_linear(&case.value, &a, &b)? * BigRational::from_integer(2.into());
                    for r in &case.roots {
                        pass &= products.get(r) == Some(&want);
                    }
                }
                // sinh^2 of the distance to each mirror, up to the common factor 1/(x,x)
                let mut sinh2 = Vec::new();
                for case in &seg.cases {
                    let vals: BTreeSet<BigRational> = case
                        .roots
                        .iter()
                        .map(|r| -> Result<BigRational> {
                            let v = &s.roots[s.index(r)?].1;
                            let p = products.get(r).cloned().unwrap_or_default();
                            Ok(&p * &p / BigRational::from_integer(-s.fixed.norm(v)))
                        })
                        .collect::<Result<_>>()?;
                    pass &= vals.len() == 1;
                    sinh2.push(vals.into_iter().next().unwrap_or_default());
                }
                let half = BigRational::new(1.into(), 2.into());
                let ratio = [&a * &a, &b * &b, (&a - &b) * (&a - &b) * &half];
                pass &= (0..3).all(|i| (0..3).all(|j| &sinh2[i] * &ratio[j] == &sinh2[j] * &ratio[i]));
                let covered: usize = seg.cases.iter().map(|c| c.roots.len()).sum();
                pass &= covered == products.len();
                values.insert(
                    format!("a={a},b={b}"),
                    products.iter().map(|(k, v)| (k.clone(), v.to_string())).collect::<BTreeMap<_, _>>(),
                );
            }
            let ends = [(0, 1), (1, 1)];
            for ((a, b), e) in ends.iter().zip(&seg.endpoints) {
                let x = point(&BigRational::from_integer((*a).into()), &BigRational::from_integer((*b).into()));
                pass &= x == rat_vec(&data::int_vector(e));
            }
            let ms = s.product(&d.s.reflections)?;
            let mt = s.product(&d.t.reflections)?;
            let ua = data::int_vector(&[-1, 0, 1, 0, 1, 0, 1]);
            let ub = data::int_vector(&[-2, 1, 0, 1, 0, 1, 0]);
            let invariant = [&ms, &mt].iter().all(|m| m.mul_vec(&ua) == ua && m.mul_vec(&ub) == ub);
            pass &= invariant;
            Ok((json!({ "products": values, "fixed_by_s_and_t": invariant }), pass))
        })
    });
}
