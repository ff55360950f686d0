//! Exact arithmetic: integers, rationals, Gaussian integers, matrices over them,
//! normal forms, signatures and short-vector enumeration.

pub mod enumerate;
pub mod f2;
pub mod gauss;
pub mod matrix;
pub mod normal_form;
pub mod quadratic;

pub use enumerate::{negdef_enumerate, negdef_enumerate_rat, vectors_of_norm};
pub use f2::{F2Matrix, F2QuadraticForm};
pub use gauss::{GaussInt, GaussRat};
pub use matrix::{GaussMatrix, IntMatrix, Matrix, RatMatrix};
pub use normal_form::{integer_fixed_sublattice, kernel_basis, smith_normal_form, Smith};
pub use quadratic::{signature, Signature};

pub type Int = num_bigint::BigInt;
pub type Rat = num_rational::BigRational;
