//! Radical and socle series, indecomposable summands and vertices.

use std::sync::Arc;

use brauerbox::ffla::PrimeField;
use brauerbox::modrep::{indecomposable_summands, is_projective, perm_rep, radical_series, regular_rep, socle_series, vertex};
use brauerbox::permgrp::{PermAction, PermGroup};

fn main() -> brauerbox::Result<()> {
    let f = PrimeField::new(3)?;
    let s3 = Arc::new(PermGroup::symmetric(3));
    let reg = regular_rep(&s3, f)?;
    println!("F3[S3] radical layers {:?}", radical_series(&reg, 0)?.layer_dims());
    println!("F3[S3] socle layers   {:?}", socle_series(&reg, 0)?.layer_dims());
    let d = indecomposable_summands(&reg, 0)?;
    println!("summand dims {:?}", d.dims());
    for s in &d.summands {
        println!("  dim {} projective {}", s.dim(), is_projective(s, 0)?);
    }

    let s6 = Arc::new(PermGroup::symmetric(6));
    let omega6 = perm_rep(&PermAction::natural(s6), f);
    let d = indecomposable_summands(&omega6, 0)?;
    for s in &d.summands {
        println!("S6 natural module summand dim {}: vertex of order {}", s.dim(), vertex(s, 0)?.order());
    }
    Ok(())
}
