//! Discrete smooth Deligne cohomology on a finite simplicial complex: the
//! cone-model complex, cocycle classes and their arithmetic, scalar
//! curvature and Weil–Kostant lifts, flat classification over `Q/Z`, Čech
//! cocycle towers over the star cover, and the degree-3 gerbe dictionary.
//!
//! Coefficients follow the discrete substitution: real forms become
//! rational cochains and the circle becomes `Q/Z`, so every test in the
//! module is exact.

pub mod cocycle;
pub mod complex;
pub mod tower;

pub use cocycle::{
    class_is_trivial, cocycle_check, dlog_consistency, exp_cochain, flat_normal_form,
    qmodz_is_exact, random_flat_cocycle, random_valid_cocycle, scalar_curvature, weil_kostant_lift,
    CocycleReport, DeligneCocycle, FlatClassData, TrivialityWitness,
};
pub use complex::{deligne_complex, DeligneComplex};
pub use tower::{
    gerbe_view, localize_cocycle, random_tower, tower_check, tower_collapse, tower_collapse_raw,
    tower_differential, CechTower, GerbeData, TowerReport,
};
