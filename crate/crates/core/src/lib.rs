//! Exact computations with integral and Gaussian lattices, hyperbolic reflection
//! groups and Coxeter diagrams.

pub mod error;
pub mod exact;

pub use error::{Error, Result};
pub mod coxeter;
pub mod gaussian;
pub mod verify;
pub mod vinberg;
pub mod zlattice;
