//! Text renderings of Coxeter diagrams.
//!
//! Nodes: norm −2 plain, −4 halved, −8 quartered. Edges: none, single, double,
//! triple for `m = 2, 3, 4, 6`; thick for parallel walls; dashed for ultraparallel.

use std::fmt::Write;
use std::str::FromStr;

use serde_json::json;

use crate::error::Error;

use super::{CoxeterDiagram, Edge};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Dot,
    Json,
    Ascii,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "dot" => Ok(Format::Dot),
            "json" => Ok(Format::Json),
            "ascii" => Ok(Format::Ascii),
            _ => Err(Error::UnknownName(s.into())),
        }
    }
}

pub fn render(d: &CoxeterDiagram, format: Format) -> String {
    match format {
        Format::Dot => dot(d),
        Format::Json => serde_json::to_string_pretty(&to_json(d)).expect("json"),
        Format::Ascii => ascii(d),
    }
}

fn norm_i64(d: &CoxeterDiagram, i: usize) -> Option<i64> {
    i64::try_from(d.norm(i)).ok()
}

fn dot(d: &CoxeterDiagram) -> String {
    let mut s = String::from("graph coxeter {\n  node [fixedsize=true, width=0.35, fontsize=10];\n");
    for i in 0..d.len() {
        let shape = match norm_i64(d, i) {
            Some(-2) => "circle",
            Some(-4) => "Mcircle",
            Some(-8) => "doublecircle",
            _ => "box",
        };
        writeln!(s, "  n{i} [label=\"{}\", shape={shape}, xlabel=\"{}\"];", d.labels[i], d.norm(i)).unwrap();
    }
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let attrs = match d.edge(i, j) {
                Edge::Angle(2) | Edge::Angle(1) => continue,
                Edge::Angle(3) => String::new(),
                Edge::Angle(4) => " [color=\"black:black\"]".into(),
                Edge::Angle(6) => " [color=\"black:black:black\"]".into(),
                Edge::Angle(m) => format!(" [label=\"{m}\"]"),
                Edge::Parallel => " [penwidth=3]".into(),
                Edge::Ultraparallel(g) => format!(" [style=dashed, tooltip=\"{g}\"]"),
            };
            writeln!(s, "  n{i} -- n{j}{attrs};").unwrap();
        }
    }
    s.push_str("}\n");
    s
}

fn edge_name(e: &Edge) -> String {
    match e {
        Edge::Angle(m) => format!("m{m}"),
        Edge::Parallel => "parallel".into(),
        Edge::Ultraparallel(_) => "ultraparallel".into(),
    }
}

pub fn to_json(d: &CoxeterDiagram) -> serde_json::Value {
    let nodes: Vec<_> = (0..d.len()).map(|i| json!({"label": d.labels[i], "norm": d.norm(i).to_string()})).collect();
    let mut edges = vec![];
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let e = d.edge(i, j);
            if *e == Edge::Angle(2) {
                continue;
            }
            edges.push(json!({"a": i, "b": j, "kind": edge_name(e), "gram": d.gram[(i, j)].to_string()}));
        }
    }
    let gram: Vec<Vec<String>> =
        (0..d.len()).map(|i| (0..d.len()).map(|j| d.gram[(i, j)].to_string()).collect()).collect();
    json!({"nodes": nodes, "edges": edges, "gram": gram})
}

fn ascii(d: &CoxeterDiagram) -> String {
    let glyph = |i: usize| match norm_i64(d, i) {
        Some(-2) => "o".to_string(),
        Some(-4) => "(|)".to_string(),
        Some(-8) => "(+)".to_string(),
        _ => format!("[{}]", d.norm(i)),
    };
    let mut s = String::new();
    for i in 0..d.len() {
        writeln!(s, "{:>4} {}", d.labels[i], glyph(i)).unwrap();
    }
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let bond = match d.edge(i, j) {
                Edge::Angle(2) | Edge::Angle(1) => continue,
                Edge::Angle(3) => "---".to_string(),
                Edge::Angle(4) => "===".to_string(),
                Edge::Angle(6) => "≡≡≡".to_string(),
                Edge::Angle(m) => format!("-{m}-"),
                Edge::Parallel => "###".to_string(),
                Edge::Ultraparallel(_) => "- -".to_string(),
            };
            writeln!(s, "{} {} {}", d.labels[i], bond, d.labels[j]).unwrap();
        }
    }
    s
}
