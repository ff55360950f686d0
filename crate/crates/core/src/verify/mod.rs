//! Reproduction checks. Expected values live in `data/*.json`; every check records
//! what it expected, what it computed and whether the two agree.

mod chamber;
mod data;
mod diagrams;
mod groups;
mod lattices;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::exact::matrix::IntMatrix;

pub use chamber::segment_inner_products;

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub anchor: String,
    pub expected: Value,
    pub computed: Value,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub records: Vec<CheckRecord>,
    pub pass: bool,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per record.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&format!("{} {}\n", if r.pass { "PASS" } else { "FAIL" }, r.id));
        }
        let failed = self.records.iter().filter(|r| !r.pass).count();
        out.push_str(&format!("{} checks, {} failed\n", self.records.len(), failed));
        out
    }
}

type Group = fn(&mut Vec<CheckRecord>);

/// Check groups in report order.
pub const CHECK_GROUPS: &[&str] = &[
    "fixed-blocks",
    "base-change",
    "simplex-family",
    "trace",
    "fixed-diagrams",
    "fixed-lattices",
    "rank-three",
    "reductions",
    "small-gaussian",
    "chamber",
    "k3",
    "e7-classes",
    "closure",
];

fn group(name: &str) -> Option<Group> {
    Some(match name {
        "fixed-blocks" => lattices::fixed_blocks,
        "base-change" => lattices::base_change,
        "simplex-family" => diagrams::simplex_family,
        "trace" => diagrams::trace,
        "fixed-diagrams" => diagrams::fixed_diagrams,
        "fixed-lattices" => lattices::fixed_lattices,
        "rank-three" => lattices::rank_three,
        "reductions" => groups::reductions,
        "small-gaussian" => lattices::small_gaussian,
        "chamber" => chamber::chamber,
        "k3" => lattices::k3,
        "e7-classes" => groups::e7_classes,
        "closure" => groups::closure,
        _ => return None,
    })
}

/// Canonical group name; matching ignores case and surrounding space.
pub fn resolve_check(name: &str) -> Option<&'static str> {
    let key = name.trim().to_ascii_lowercase();
    CHECK_GROUPS.iter().copied().find(|g| *g == key)
}

/// Run the selected groups (all when `selection` is empty).
pub fn verify_paper(selection: &[String]) -> Result<VerificationReport> {
    let names: Vec<&'static str> = if selection.is_empty() {
        CHECK_GROUPS.to_vec()
    } else {
        selection
            .iter()
            .map(|s| resolve_check(s).ok_or_else(|| Error::UnknownName(format!("check '{s}'"))))
            .collect::<Result<_>>()?
    };
    let mut records = Vec::new();
    for name in names {
        let run = group(name).expect("listed group");
        run(&mut records);
    }
    let pass = records.iter().all(|r| r.pass);
    Ok(VerificationReport { records, pass })
}

pub(crate) fn record(id: String, anchor: &str, expected: Value, computed: Value, pass: bool) -> CheckRecord {
    CheckRecord { id, anchor: anchor.to_string(), expected, computed, pass }
}

/// Turn an evaluation into a record; errors become failing records.
pub(crate) fn check(
    out: &mut Vec<CheckRecord>,
    id: String,
    anchor: &str,
    expected: Value,
    f: impl FnOnce() -> Result<(Value, bool)>,
) {
    let rec = match f() {
        Ok((computed, pass)) => record(id, anchor, expected, computed, pass),
        Err(e) => record(id, anchor, expected, serde_json::json!({ "error": e.to_string() }), false),
    };
    out.push(rec);
}

pub(crate) fn big_json(x: &BigInt) -> Value {
    x.to_i64().map(Value::from).unwrap_or_else(|| Value::String(x.to_string()))
}

pub(crate) fn vec_json(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(big_json).collect())
}

pub(crate) fn matrix_json(m: &IntMatrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| vec_json(r)).collect())
}
