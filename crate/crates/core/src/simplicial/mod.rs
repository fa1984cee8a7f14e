//! Finite abstract simplicial complexes, cochains, star covers, joins, and
//! the built-in corpus of test spaces.

pub mod cochain;
pub mod complex;
pub mod cover;
pub mod join;
pub mod periods;
pub mod spaces;

pub use cochain::{Cochain, CoefRing};
pub use complex::{Complex, SimplexKey};
pub use cover::Cover;
pub use join::join_complex;
pub use periods::{integral_periods, ComplexHomology, PeriodReport};
pub use spaces::{standard_space, SpaceName};
