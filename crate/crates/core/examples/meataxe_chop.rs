//! Composition factors of permutation modules with the MeatAxe.

use std::sync::Arc;

use brauerbox::ffla::PrimeField;
use brauerbox::modrep::{chop, perm_rep};
use brauerbox::permgrp::{coset_action, PermAction, PermGroup};

fn main() -> brauerbox::Result<()> {
    let f = PrimeField::new(3)?;
    let a8 = Arc::new(PermGroup::alternating(8));
    let omega8 = perm_rep(&PermAction::natural(a8.clone()), f);
    let c = chop(&omega8, 0)?;
    println!("F3[A8/A7]: {:?}", c.summary());

    let pair = PermGroup::from_cycles(8, &["(1,2,3)", "(2,3,4,5,6)", "(1,2)(7,8)"])?;
    let omega28 = perm_rep(&coset_action(&a8, &pair)?, f);
    let c = chop(&omega28, 0)?;
    println!("F3 on 2-subsets: composition factor dims {:?}", c.dims());
    for seed in 1..4 {
        assert!(c.same_as(&chop(&omega28, seed)?)?);
    }
    println!("same constituents for seeds 0..4");
    Ok(())
}
