//! Exact dense linear algebra over prime fields.

mod field;
mod matrix;
mod poly;

pub use field::{FieldScalar, PrimeField, DEFAULT_PRIME};
pub use matrix::{complement_indices, independent_subset, Matrix, RankProfile, Solution, Solver};
pub use poly::{Factorization, Poly};
