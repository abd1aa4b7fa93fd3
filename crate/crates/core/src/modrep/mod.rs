//! Modules over group algebras `kG` as matrix representations.

mod decompose;
mod hom;
pub mod io;
mod meataxe;
mod projective;
mod rep;
mod series;

pub use decompose::{indecomposable_summands, Certificate, Decomposition, DEFAULT_MAX_DIM, FITTING_ROUNDS};
pub use hom::{hom_space, is_isomorphic, is_isomorphic_seeded};
pub use meataxe::{chop, is_irreducible, spin, spin_with, split, Constituent, ConstituentSummary, Constituents, Split};
pub use projective::{is_projective, is_relatively_projective, vertex};
pub use rep::{perm_rep, regular_rep, MatRep};
pub use series::{radical, radical_series, socle, socle_series, SeriesReport};
