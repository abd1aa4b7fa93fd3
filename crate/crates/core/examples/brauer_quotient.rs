//! Fixed points, relative traces and the Brauer quotient of F3[A8/A7].

use std::sync::Arc;

use brauerbox::brauer::{brauer_quotient, fixed_points, green_trivial_source};
use brauerbox::cli::construct;
use brauerbox::modrep::{chop, perm_rep};
use brauerbox::permgrp::{normalizer, PermAction, SearchBound};

fn main() -> brauerbox::Result<()> {
    let a8 = Arc::new(construct::a8());
    let p = construct::sylow3();
    let n = Arc::new(normalizer(&a8, &p, SearchBound::default())?);
    let v = perm_rep(&PermAction::natural(a8), construct::f3());

    println!("dim V^P = {}", fixed_points(&v, &p)?.dim());
    let bq = brauer_quotient(&v, &p, &n)?;
    println!("traced subspace dim {}, V(P) dim {}", bq.traced_subspace.dim(), bq.dim());
    println!("V(P) over N(P): constituent dims {:?}", chop(&bq.quotient_rep, 0)?.dims());

    // V is a permutation module, so V(P) is the span of the P-fixed points
    let fast = green_trivial_source(&v, &p, &n)?;
    println!("fast path: fixed points {:?} (1-based)", fast.fixed_points.iter().map(|i| i + 1).collect::<Vec<_>>());
    Ok(())
}
