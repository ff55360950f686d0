//! Identify the class of an involution of a finite orthogonal group over `F_2` with a
//! Richardson class of a Weyl group acting on its root lattice modulo 2.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::f2::{conjugacy_orbit, F2Matrix, F2QuadraticForm};
use crate::gaussian::max_closure;

use super::richardson::{involution_classes, longest_element};
use super::CoxeterSystem;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct F2Class {
    /// Names of the Weyl group classes reducing into the orbit of `g`, e.g. `(D4, A1^3')`.
    pub label: String,
    pub classes: Vec<String>,
    pub fixed_dim: usize,
}

pub fn reduce_mod_2(m: &[Vec<i64>]) -> F2Matrix {
    F2Matrix::from_bools(&m.iter().map(|r| r.iter().map(|x| x.rem_euclid(2) == 1).collect()).collect::<Vec<_>>())
}

/// Simple reflections of a crystallographic system, reduced modulo 2.
pub fn reflections_mod_2(sys: &CoxeterSystem) -> Result<Vec<F2Matrix>> {
    Ok(sys.reflection_matrices()?.iter().map(|s| reduce_mod_2(s)).collect())
}

pub fn f2_class_of(sys: &CoxeterSystem, g: &F2Matrix, q: &F2QuadraticForm) -> Result<F2Class> {
    if g.dim() != sys.rank() || q.dim() != sys.rank() {
        return Err(Error::DimensionMismatch("matrix, form and Coxeter system sizes".into()));
    }
    if !q.is_preserved_by(g) {
        return Err(Error::NotAnIsometry("g does not preserve q".into()));
    }
    let gens = reflections_mod_2(sys)?;
    if let Some(i) = gens.iter().position(|s| !q.is_preserved_by(s)) {
        return Err(Error::Invalid(format!("simple reflection {i} does not preserve q")));
    }
    let orbit = conjugacy_orbit(g, &gens, max_closure())?;
    let mut classes = vec![];
    for c in involution_classes(sys)? {
        let w = reduce_mod_2(&longest_element(sys, &c.representative)?);
        if orbit.contains(&w) {
            classes.push(c.name);
        }
    }
    let label = match classes.len() {
        0 => "none".to_string(),
        1 => classes[0].clone(),
        _ => format!("({})", classes.join(", ")),
    };
    Ok(F2Class { label, classes, fixed_dim: g.fixed_space_dim() })
}
