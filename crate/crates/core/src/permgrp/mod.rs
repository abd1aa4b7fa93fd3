//! Permutation groups: stabilizer chains with straight-line programs,
//! actions and coset actions, backtrack normalizers, Sylow subgroups,
//! subgroup fusion and semidirect products.
//!
//! Points are 0-based internally and 1-based in cycle notation.

mod action;
mod fingerprint;
mod fusion;
mod group;
pub mod io;
mod perm;
mod search;
mod semidirect;
mod slp;
mod subgroup;

pub use action::{canonical_coset_rep, coset_action, enumerate_cosets, right_transversal, Orbit, PermAction};
pub use fingerprint::{fingerprint, Fingerprint};
pub use fusion::{fusion_data, same_double_coset, verify_double_cosets, FusionData, FusionRep};
pub use group::{PermGroup, Sift};
pub use perm::Perm;
pub use search::{
    all_subgroups, conjugating_element, maximal_subgroups_of_p_group, normalizer, p_part, sylow, SearchBound,
};
pub use semidirect::{semidirect_product, translation_subgroup, ModuleFactor, SemidirectLayout};
pub use slp::{Evaluator, GroupLike, Node, Slp, Unit};
pub use subgroup::Subgroup;
