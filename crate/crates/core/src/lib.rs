//! Exact-arithmetic models of the geometric bar construction and of smooth
//! Deligne cohomology on finite simplicial complexes.
//!
//! Everything is computed over `Z`, `Q`, or `Q/Z` with arbitrary-precision
//! integers; there is no floating point anywhere in the crate. The main
//! pieces:
//!
//! * [`exact`] — sparse matrices, Smith normal form, integer/rational
//!   solvers, chain complexes and their homology, mapping cones, double
//!   complexes.
//! * [`simplicial`] — finite abstract simplicial complexes, cochains over
//!   `Z`/`Q`/`Q/Z`, closed-star covers, joins, integral periods, and the
//!   built-in corpus of test spaces.
//! * [`bar`] — simplicial abelian groups `EG`, `BG`, iterated classifying
//!   spaces, Eilenberg–MacLane homology, bar-resolution exactness, Milnor
//!   join and Dold–Lashof models, and point-level shuffle arithmetic.
//! * [`deligne`] — the cone-model Deligne complex, cocycle classes, scalar
//!   curvature and Weil–Kostant lifts, flat classification, Čech towers over
//!   the star cover, and the degree-3 gerbe dictionary.
//! * [`suite`] — the corpus verification suite run by the CLI.

pub mod bar;
pub mod deligne;
pub mod error;
pub mod exact;
pub mod io;
pub mod rng;
pub mod scalar;
pub mod simplicial;
pub mod suite;

pub use error::Error;
pub use scalar::{Integer, Rational, Scalar};

/// Sparse matrix with arbitrary-precision integer entries.
pub type IntMatrix = exact::matrix::SparseMatrix<Integer>;
/// Sparse matrix with exact rational entries.
pub type RatMatrix = exact::matrix::SparseMatrix<Rational>;
/// Bounded complex of free `Z`-modules.
pub type IntComplex = exact::complex::GradedComplex<Integer>;
/// Bounded complex of `Q`-vector spaces.
pub type RatComplex = exact::complex::GradedComplex<Rational>;

pub type Result<T> = std::result::Result<T, Error>;
