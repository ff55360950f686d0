//! Reflection groups found by Vinberg's algorithm, compared with tabulated diagrams.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use super::data::{self, load, LabelledRoot};
use super::{check, vec_json, CheckRecord};
use crate::coxeter::render::to_json;
use crate::coxeter::{shape_isomorphism, CoxeterDiagram, DiagramShape};
use crate::error::{Error, Result};
use crate::exact::matrix::{IntMatrix, Matrix};
use crate::gaussian::{fixed_lattice, named_involution};
use crate::vinberg::{run_vinberg, Status, VinbergConfig, VinbergRun};
use crate::zlattice::{build_z, decide_isomorphic, ZLattice};

pub(crate) fn finished(run: &VinbergRun) -> Result<CoxeterDiagram> {
    if run.status != Status::Finished {
        return Err(Error::Invalid(format!("run stopped with status {:?}", run.status)));
    }
    run.diagram()
}

fn shape_json(d: &CoxeterDiagram) -> Value {
    to_json(d)
}

/// Affine `B2` and `C2` are the same diagram.
fn cusp_name(s: &str) -> String {
    if s == "~B2" {
        "~C2".to_string()
    } else {
        s.to_string()
    }
}

fn sorted_cusps<'a>(names: impl Iterator<Item = &'a str>) -> Vec<String> {
    let mut v: Vec<String> = names.map(cusp_name).collect();
    v.sort();
    v
}

pub(crate) fn simplex_family(out: &mut Vec<CheckRecord>) {
    let d: data::SimplexFamily = load(include_str!("../../data/simplex_family.json"));
    for row in &d.rows {
        let id = format!("simplex-family/{}", row.lattice);
        let expected =
            json!({ "roots": row.roots, "norms": row.shape.norms, "edges": row.shape.edges, "cusps": row.cusps });
        check(out, id, &d.anchor, expected, || {
            let l = build_z(&row.lattice)?;
            let p = data::int_vector(&row.controller);
            let run = run_vinberg(&VinbergConfig::new(l)?.with_controller(p))?;
            let diagram = finished(&run)?;
            let iso = shape_isomorphism(&row.shape.to_shape()?, &diagram.shape()).is_some();
            let census = run.census.as_ref().ok_or_else(|| Error::Invalid("no census".into()))?;
            let cusps = sorted_cusps(census.cusps.iter().map(|f| f.kind.as_str()));
            let cusps_ok = cusps == sorted_cusps(row.cusps.iter().map(String::as_str));
            let computed = json!({
                "roots": run.roots.len(),
                "diagram": shape_json(&diagram),
                "shape_matches": iso,
                "cusps": cusps,
                "finite_volume": census.finite_volume,
            });
            Ok((computed, run.roots.len() == row.roots && iso && cusps_ok && census.finite_volume))
        });
    }
}

fn height(s: &str) -> Result<BigRational> {
    s.parse().map_err(|_| Error::Parse(format!("height '{s}'")))
}

/// Compare accepted roots with labelled ones level by level; returns labels in run order.
fn match_roots(
    run: &VinbergRun,
    map: impl Fn(&[BigInt]) -> Vec<BigInt>,
    expected: &[LabelledRoot],
) -> Result<Option<Vec<String>>> {
    if run.roots.len() != expected.len() {
        return Ok(None);
    }
    let mut labels = Vec::new();
    for r in &run.roots {
        let v = map(&r.vector);
        let hit = expected.iter().find(|e| data::int_vector(&e.vector) == v);
        match hit {
            Some(e) if height(&e.height)? == r.height => labels.push(e.label.clone()),
            _ => return Ok(None),
        }
    }
    Ok(Some(labels))
}

fn d4_frame(cols: &[Vec<i64>]) -> IntMatrix {
    let d4 = Matrix::from_cols(cols.iter().map(|c| data::int_vector(c)).collect());
    Matrix::block_diag(&[IntMatrix::identity(3), d4])
}

pub(crate) fn trace(out: &mut Vec<CheckRecord>) {
    let d: data::Trace = load(include_str!("../../data/trace.json"));
    let fig: data::FixedDiagrams = load(include_str!("../../data/fixed_lattice_diagrams.json"));
    let expected: Vec<Value> =
        d.roots.iter().map(|r| json!({ "label": r.label, "height": r.height, "vector": r.vector })).collect();
    check(out, "trace/roots in ambient coordinates".into(), &d.anchor, json!(expected), || {
        let t = d4_frame(&d.d4_columns);
        let ambient = IntMatrix::diagonal(&data::int_vector(&d.gram_diagonal));
        let l = ZLattice::new("(2)+A1^2+D4(2)", ambient.congruent(&t))?;
        let same = decide_isomorphic(&l, &build_z("(2)+A1^2+D4(2)")?).is_isomorphic();
        let config = VinbergConfig::new(l)?.with_controller(data::int_vector(&d.controller)).with_frame(t.clone());
        let run = run_vinberg(&config)?;
        let diagram = finished(&run)?;
        let found: Vec<Value> = run
            .roots
            .iter()
            .map(|r| json!({ "height": r.height.to_string(), "vector": vec_json(&t.mul_vec(&r.vector)) }))
            .collect();
        let labels = match_roots(&run, |v| t.mul_vec(v), &d.roots)?;
        // edges agree with the labelled diagram of the same lattice
        let panel = fig.rows.iter().find(|r| r.lattice == "(2)+A1^2+D4(2)").ok_or(Error::Invalid("no panel".into()))?;
        let edges_ok = labels.as_ref().is_some_and(|labels| labelled_edges_agree(&diagram, labels, &panel.shape));
        let computed = json!({ "roots": found, "labels": labels, "edges_match_labelled_diagram": edges_ok });
        Ok((computed, same && labels.is_some() && edges_ok))
    });
}

/// Edge classes between labelled nodes agree with `shape`, whose nodes carry `shape.labels`.
fn labelled_edges_agree(d: &CoxeterDiagram, labels: &[String], shape: &data::Shape) -> bool {
    let Ok(s) = shape.to_shape() else { return false };
    let pos = |l: &str| shape.labels.iter().position(|x| x == l);
    let idx: Option<Vec<usize>> = labels.iter().map(|l| pos(l)).collect();
    let Some(idx) = idx else { return false };
    (0..labels.len()).all(|i| {
        s.norms[idx[i]] == *d.norm(i)
            && (0..labels.len()).all(|j| i == j || s.edge(idx[i], idx[j]) == d.edge(i, j).class())
    })
}

fn default_run(expr: &str) -> Result<(VinbergRun, CoxeterDiagram)> {
    let run = run_vinberg(&VinbergConfig::new(build_z(expr)?)?)?;
    let d = finished(&run)?;
    Ok((run, d))
}

fn compare_shape(expr: &str, shape: &DiagramShape) -> Result<(Value, bool)> {
    let (run, d) = default_run(expr)?;
    let iso = shape_isomorphism(shape, &d.shape()).is_some();
    let fv = run.census.as_ref().is_some_and(|c| c.finite_volume);
    Ok((json!({ "roots": run.roots.len(), "diagram": shape_json(&d), "shape_matches": iso }), iso && fv))
}

pub(crate) fn fixed_diagrams(out: &mut Vec<CheckRecord>) {
    let d: data::FixedDiagrams = load(include_str!("../../data/fixed_lattice_diagrams.json"));
    for row in &d.rows {
        let id = format!("fixed-diagrams/{} {}", row.panel, row.lattice);
        let expected = json!({ "involutions": row.involutions, "norms": row.shape.norms, "edges": row.shape.edges });
        check(out, id, &d.anchor, expected, || {
            let (mut computed, mut pass) = compare_shape(&row.lattice, &row.shape.to_shape()?)?;
            let target = build_z(&row.lattice)?;
            let mut fixed = serde_json::Map::new();
            for inv in &row.involutions {
                let f = fixed_lattice(&named_involution(inv)?)?.zlat;
                let iso = decide_isomorphic(&f, &target).is_isomorphic();
                pass &= iso;
                fixed.insert(inv.clone(), json!(iso));
            }
            computed["fixed_lattice_is_row_lattice"] = Value::Object(fixed);
            Ok((computed, pass))
        });
    }
    let p = &d.plus_lattice;
    let id = format!("fixed-diagrams/plus {}", p.lattice);
    check(out, id, &d.anchor, json!({ "norms": p.shape.norms, "edges": p.shape.edges }), || {
        compare_shape(&p.lattice, &p.shape.to_shape()?)
    });
}
