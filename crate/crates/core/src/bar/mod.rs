//! The geometric bar construction in its discrete incarnations: simplicial
//! abelian groups `EG`, `BG`, iterated classifying spaces, Eilenberg–MacLane
//! homology, bar-resolution exactness, Milnor join and Dold–Lashof models,
//! and point-level shuffle arithmetic.

pub mod em;
pub mod milnor;
pub mod models;
pub mod moore;
pub mod point;
pub mod resolution;
pub mod simgroup;

pub use em::em_homology;
pub use milnor::{dl_to_join, join_to_dl, milnor_join_homology, DlPoint, JoinPoint};
pub use models::normalized_chains;
pub use moore::homotopy_groups;
pub use point::{contraction_point, shuffle_add, BarPoint, GroupElt, PointGroup, PointKind};
pub use resolution::{bar_resolution_check, ResolutionReport};
pub use simgroup::{b_of, e_of, iterate_b, SimAbGroup, DEFAULT_BUDGET};
