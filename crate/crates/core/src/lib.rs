//! Exact modular representation theory over small prime fields.
//!
//! The crate is organised bottom-up:
//!
//! - [`ffla`]: dense matrices and polynomials over `F_p`.
//! - [`permgrp`]: permutation groups with stabilizer chains, actions,
//!   normalizers, Sylow subgroups, subgroup fusion and semidirect products.
//! - [`modrep`]: matrix representations, the MeatAxe, hom spaces,
//!   radical/socle series, indecomposable decomposition, vertices.
//! - [`brauer`]: fixed points, relative traces, Brauer quotients,
//!   fixed points of coset actions, marks, Green correspondents.
//! - [`blocks`]: linear characters, idempotents of normal `p'`-subgroups
//!   and projections.
//! - [`cli`]: file formats, JSON reports and the scenario runner used by
//!   the `brauerbox` binary.

pub mod blocks;
pub mod brauer;
pub mod cli;
mod error;
pub mod ffla;
pub mod modrep;
pub mod permgrp;

pub use error::{Error, Result};
