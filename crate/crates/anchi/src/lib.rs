//! Exact computation of local Euler characteristics of symmetric powers of
//! the cotangent sheaf at `A_n` surface singularities.
//!
//! The headline quantity is `chi_loc(n, m)`, the local Euler characteristic of
//! the m-th symmetric power of the cotangent sheaf at an `A_n` singularity,
//! together with its components `chi0` (sections that fail to extend over the
//! exceptional locus) and `chi1` (first cohomology on a resolution
//! neighbourhood). Each quantity is computed by several independent routes
//! (closed-form quasi-polynomial, rational generating function, toric
//! recursion, lattice-point counts in half-open rational polytopes), and the
//! routes are required to agree exactly.
//!
//! Everything is exact: arbitrary-precision rationals throughout, no floating
//! point anywhere.
//!
//! The [`hyperbolicity`] module applies the local counts to nodal surfaces in
//! projective 3-space: it evaluates the Euler characteristic of symmetric
//! cotangent powers on smooth hypersurfaces via Riemann–Roch and derives the
//! singularity-count thresholds beyond which the cotangent bundle of a
//! resolution is forced to be big.

pub mod euler;
pub mod exact;
pub mod hyperbolicity;
pub mod klyachko;
pub(crate) mod linalg;
pub mod polytopes;

pub use exact::{Int, Polynomial, QuasiPolynomial, Rational, RationalFunction};
