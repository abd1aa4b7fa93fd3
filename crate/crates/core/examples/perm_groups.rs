//! Stabilizer chains, Sylow subgroups, normalizers and coset actions.

use std::sync::Arc;

use brauerbox::permgrp::{coset_action, normalizer, sylow, PermGroup, SearchBound};

fn main() -> brauerbox::Result<()> {
    let a8 = Arc::new(PermGroup::alternating(8));
    println!("|A8| = {}, base {:?}, orbit lengths {:?}", a8.order(), a8.base(), a8.basic_orbit_lengths());

    let bound = SearchBound::default();
    let p = sylow(&a8, 3, 0, bound)?;
    println!("Sylow 3-subgroup of order {} generated by", p.order());
    for g in p.gens() {
        println!("  {g}");
    }
    let n = normalizer(&a8, &p, bound)?;
    println!("|N(P)| = {}", n.order());

    let a7 = PermGroup::from_cycles(8, &["(1,2,3)", "(1,2,3,4,5,6,7)"])?;
    let act = coset_action(&a8, &a7)?;
    println!("A8 on the cosets of A7: {} points, transitive {}", act.size(), act.is_transitive());
    let on_p = act.restrict(Arc::new(p))?;
    println!("P-orbits on the cosets: {:?}", on_p.orbits());
    Ok(())
}
