//! Typed views of the bundled data files.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::de::DeserializeOwned;
use serde::Deserialize;

use crate::coxeter::{DiagramShape, EdgeClass};
use crate::error::{Error, Result};
use crate::exact::gauss::GaussInt;
use crate::exact::matrix::{GaussMatrix, IntMatrix, Matrix};

pub(crate) fn load<T: DeserializeOwned>(text: &str) -> T {
    serde_json::from_str(text).expect("bundled data is valid")
}

pub(crate) fn gauss_rows(rows: &[Vec<String>]) -> Result<GaussMatrix> {
    let parsed: Result<Vec<Vec<GaussInt>>> = rows.iter().map(|r| r.iter().map(|s| s.parse()).collect()).collect();
    Ok(Matrix::from_rows(parsed?))
}

pub(crate) fn int_rows(rows: &[Vec<i64>]) -> IntMatrix {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
}

pub(crate) fn int_vector(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[derive(Deserialize)]
pub(crate) struct FixedBlocks {
    pub anchor: String,
    pub rows: Vec<FixedBlockRow>,
}

#[derive(Deserialize)]
pub(crate) struct FixedBlockRow {
    pub involution: String,
    pub lattice: String,
    pub fixed: String,
    pub basis: Vec<Vec<String>>,
}

#[derive(Deserialize)]
pub(crate) struct BaseChanges {
    pub anchor: String,
    pub explicit: Vec<ExplicitBaseChange>,
    pub by_invariants: Vec<InvariantBaseChange>,
}

#[derive(Deserialize)]
pub(crate) struct ExplicitBaseChange {
    pub source: String,
    pub target: String,
    pub matrix: Vec<Vec<i64>>,
}

#[derive(Deserialize)]
pub(crate) struct InvariantBaseChange {
    pub source: String,
    pub target: String,
    pub invariants: [i64; 4],
}

#[derive(Deserialize)]
pub(crate) struct RankThree {
    pub anchor: String,
    pub lattice: String,
    pub rows: Vec<PairRow>,
}

#[derive(Deserialize)]
pub(crate) struct PairRow {
    pub involution: String,
    pub fixed: String,
    pub fixed_i: String,
}

#[derive(Deserialize)]
pub(crate) struct FixedLattices {
    pub anchor: String,
    pub rows: Vec<FixedLatticeRow>,
}

#[derive(Deserialize)]
pub(crate) struct FixedLatticeRow {
    pub involution: String,
    pub fixed: String,
    pub log2_det: u32,
    pub fixed_i: String,
    pub log2_det_i: u32,
}

#[derive(Deserialize)]
pub(crate) struct Reductions {
    pub anchor: String,
    pub rows: Vec<ReductionRow>,
    pub group_order: usize,
}

#[derive(Deserialize)]
pub(crate) struct ReductionRow {
    pub involution: String,
    pub classes: Vec<String>,
    pub fixed_dim: usize,
}

#[derive(Deserialize)]
pub(crate) struct SmallGaussian {
    pub anchor: String,
    pub lattice: String,
    pub projective_roots: usize,
    pub tetraflection_group_order: usize,
}

#[derive(Deserialize, Clone)]
pub(crate) struct Shape {
    pub norms: Vec<i64>,
    pub edges: Vec<(usize, usize, String)>,
    #[serde(default)]
    pub labels: Vec<String>,
}

impl Shape {
    pub fn to_shape(&self) -> Result<DiagramShape> {
        let edges: Result<Vec<(usize, usize, EdgeClass)>> =
            self.edges.iter().map(|(i, j, c)| Ok((i - 1, j - 1, edge_class(c)?))).collect();
        Ok(DiagramShape::new(&self.norms, &edges?))
    }
}

pub(crate) fn edge_class(s: &str) -> Result<EdgeClass> {
    Ok(match s {
        "inf" => EdgeClass::Parallel,
        "ultra" => EdgeClass::Ultraparallel,
        m => EdgeClass::Angle(m.parse().map_err(|_| Error::Parse(format!("edge class '{m}'")))?),
    })
}

#[derive(Deserialize)]
pub(crate) struct SimplexFamily {
    pub anchor: String,
    pub rows: Vec<SimplexRow>,
}

#[derive(Deserialize)]
pub(crate) struct SimplexRow {
    pub lattice: String,
    pub controller: Vec<i64>,
    pub roots: usize,
    #[serde(flatten)]
    pub shape: Shape,
    pub cusps: Vec<String>,
}

#[derive(Deserialize)]
pub(crate) struct FixedDiagrams {
    pub anchor: String,
    pub rows: Vec<FixedDiagramRow>,
    pub plus_lattice: PlusLattice,
}

#[derive(Deserialize)]
pub(crate) struct FixedDiagramRow {
    pub panel: String,
    pub lattice: String,
    pub involutions: Vec<String>,
    #[serde(flatten)]
    pub shape: Shape,
}

#[derive(Deserialize)]
pub(crate) struct PlusLattice {
    pub lattice: String,
    #[serde(flatten)]
    pub shape: Shape,
}

#[derive(Deserialize, Clone)]
pub(crate) struct LabelledRoot {
    pub label: String,
    pub height: String,
    pub vector: Vec<i64>,
}

#[derive(Deserialize)]
pub(crate) struct Trace {
    pub anchor: String,
    pub gram_diagonal: Vec<i64>,
    pub d4_columns: Vec<Vec<i64>>,
    pub controller: Vec<i64>,
    pub roots: Vec<LabelledRoot>,
}

#[derive(Deserialize)]
pub(crate) struct Chamber {
    pub anchor: String,
    pub lattice: String,
    pub basis: Vec<Vec<String>>,
    pub fixed: String,
    pub controller: Vec<i64>,
    pub roots: Vec<LabelledRoot>,
    pub double_edges: Vec<(String, String)>,
    pub thick_edges: Vec<(String, String)>,
    pub grey: Vec<String>,
    pub automorphism_order: usize,
    pub tetrahedron: Vec<String>,
    pub s: Generator,
    pub t: Generator,
    pub hyperelliptic_wall: Wall,
    pub orthocomplements: BTreeMap<String, String>,
    pub segment: Segment,
}

#[derive(Deserialize)]
pub(crate) struct Generator {
    pub reflections: Vec<Vec<i64>>,
    pub order: usize,
    #[serde(default)]
    pub fixes: Vec<String>,
    #[serde(default)]
    pub cycle: Vec<String>,
    #[serde(default)]
    pub swaps: Vec<String>,
}

#[derive(Deserialize)]
pub(crate) struct Wall {
    pub root: String,
    pub nodes: Vec<String>,
}

#[derive(Deserialize)]
pub(crate) struct Segment {
    pub point: String,
    pub cases: Vec<SegmentCase>,
    pub endpoints: Vec<Vec<i64>>,
}

#[derive(Deserialize)]
pub(crate) struct SegmentCase {
    pub value: String,
    pub roots: Vec<String>,
}

#[derive(Deserialize)]
pub(crate) struct K3 {
    pub anchor: String,
    pub e8_subset: Vec<usize>,
    pub plus: K3Plus,
    pub minus: K3Minus,
    pub empty: K3Empty,
}

#[derive(Deserialize)]
pub(crate) struct K3Plus {
    pub lattice: String,
    pub invariants: [i64; 4],
}

#[derive(Deserialize)]
pub(crate) struct K3Minus {
    pub presentations: Vec<String>,
    pub invariants: [i64; 4],
}

#[derive(Deserialize)]
pub(crate) struct K3Empty {
    pub fixed: String,
    pub r_a_delta: [i64; 3],
    pub topology: String,
    pub minus_restriction: String,
    pub plus_restriction: String,
}

#[derive(Deserialize)]
pub(crate) struct E7Classes {
    pub anchor: String,
    #[serde(rename = "type")]
    pub kind: String,
    pub classes: usize,
    pub pairs: Vec<(String, String)>,
    pub distinct_sets: BTreeMap<String, Vec<usize>>,
    pub small_ranks: Vec<SmallRank>,
}

#[derive(Deserialize)]
pub(crate) struct SmallRank {
    #[serde(rename = "type")]
    pub kind: String,
    pub classes: usize,
}
