//! The 3-local group 2^4:GL2(3)-type construction and its permutation module.

use brauerbox::cli::construct;
use brauerbox::modrep::{chop, perm_rep};
use brauerbox::permgrp::{coset_action, fingerprint};

fn main() -> brauerbox::Result<()> {
    let local = construct::local_groups()?;
    println!("|N| = {}, degree {}", local.n.order(), local.n.degree());
    println!("|H'| = {}, |H| = {}, |Ntilde| = {}", local.hprime.order(), local.h.order(), local.ntilde.order());
    let reference = construct::ntilde_reference()?;
    println!(
        "Ntilde fingerprint matches the reference construction: {}",
        fingerprint(&local.ntilde, 1 << 20)? == fingerprint(&reference, 1 << 20)?
    );

    let dual = construct::dual_module_check(&local, 0)?;
    println!("dual of E: GL2(3) orbits {:?}, D8 orbits {:?}", dual.gl23_orbits, dual.d8_orbits);

    let v = perm_rep(&coset_action(&local.n, &local.ntilde)?, construct::f3());
    let c = chop(&v, 0)?;
    println!("F3[Ntilde \\ N] has dim {} and constituents {:?}", v.dim(), c.summary());
    Ok(())
}
