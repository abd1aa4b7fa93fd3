//! Linear characters, central idempotents and projections of a module.

use std::sync::Arc;

use brauerbox::blocks::{idempotent_from_character, linear_characters, project};
use brauerbox::cli::construct;
use brauerbox::modrep::{chop, perm_rep};
use brauerbox::permgrp::coset_action;

fn main() -> brauerbox::Result<()> {
    let local = construct::local_groups()?;
    let f = construct::f3();
    let chars = linear_characters(&local.e, f)?;
    println!("E has {} linear characters over F3", chars.len());

    let v = perm_rep(&coset_action(&local.n, &local.ntilde)?, f);
    let res = v.restrict(&local.h)?;
    // E x P centralizes E, so it fixes every idempotent of F3[E]
    let mut gens = local.e.gens().to_vec();
    gens.extend(local.p.gens().iter().cloned());
    let designated = Arc::new(local.n.subgroup(gens)?);
    let mut total = 0;
    for lambda in &chars {
        let e = idempotent_from_character(lambda)?;
        let pr = project(&res, &e, &designated)?;
        total += pr.module.dim();
        println!("  values {:?}: image dim {}", lambda.values(), pr.module.dim());
    }
    println!("projected dims add up to {total} of {}", v.dim());

    let e12 = construct::hprime_fixed_idempotent(&local)?;
    let pr = project(&res, &e12, &local.hprime)?;
    println!("(e1 + e2) V over H' has constituent dims {:?}", chop(&pr.module, 0)?.dims());
    Ok(())
}
