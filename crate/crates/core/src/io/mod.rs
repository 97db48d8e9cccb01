//! Text formats for algebras and complexes, JSON reports and DOT export.

mod algebra_file;
mod complex_file;
mod expr;
mod report;

pub use algebra_file::{parse_algebra, print_algebra, AlgebraFile};
pub use complex_file::{parse_complex, print_complex};
pub use report::{emit_dot, emit_report};
