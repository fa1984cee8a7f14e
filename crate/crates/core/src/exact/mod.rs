//! Exact integer and rational linear algebra: the computational substrate
//! for every other module.

pub mod complex;
pub mod double;
pub mod group;
pub mod matrix;
pub mod snf;
pub mod solve;

pub use complex::{ChainMap, Direction, GradedComplex, HomologyResult};
pub use double::DoubleComplex;
pub use group::FgAbGroup;
pub use matrix::SparseMatrix;
pub use snf::{smith_normal_form, SnfResult};
