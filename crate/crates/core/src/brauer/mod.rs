//! Fixed points, relative traces, the Brauer quotient `V(P)` with its
//! `N_G(P)`-action, fixed points of coset spaces and Green correspondents.

mod fixed;
mod green;
mod quotient;

pub use fixed::{direct_fixed_count, marks_count, perm_fixed_points, FixedPointPart, FixedPointReport};
pub use green::{green_correspondent, green_pipeline, green_trivial_source, GreenCorrespondence, TrivialSourceImage};
pub use quotient::{brauer_quotient, fixed_points, relative_trace, BrauerQuotient};

use crate::permgrp::PermGroup;

/// Whether the order of `g` is a power of `p` (the trivial group included).
pub fn is_p_group(g: &PermGroup, p: u64) -> bool {
    let mut n = g.order();
    while n % p as u128 == 0 {
        n /= p as u128;
    }
    n == 1
}
