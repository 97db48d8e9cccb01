//! Silting and tilting computations for finite-dimensional algebras over prime fields.

pub mod algebra;
pub mod complex;
pub mod demo;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod krull_schmidt;
pub mod linalg;
pub mod module;
pub mod mutation;
pub(crate) mod rng;
pub mod silting;
pub mod spherical;

pub use error::{Error, Result};
