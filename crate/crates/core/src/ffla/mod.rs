//! Exact dense linear algebra and univariate polynomials over prime fields
//! `F_p` with `p <= 251`.
//!
//! Matrices act on row vectors from the right, so a module element `v`
//! is mapped to `v * A`. Every routine here is exact; randomized routines
//! take explicit seeds.

mod charpoly;
mod field;
pub mod io;
mod matrix;
mod poly;
mod subspace;

pub use charpoly::{char_poly, min_poly, vector_min_poly};
pub use field::{FpScalar, PrimeField};
pub use matrix::{FpMatrix, Rref};
pub use poly::{factor_poly, factor_poly_seeded, FpPoly};
pub use subspace::Subspace;

/// Default modulus; every computation in the bundled scenarios runs over `F_3`.
pub const DEFAULT_P: u8 = 3;
