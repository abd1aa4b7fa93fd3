//! Green correspondents of the simple constituents of F3[A8/A7] and of the 13-dimensional simple.

use std::sync::Arc;

use brauerbox::brauer::green_correspondent;
use brauerbox::cli::construct;
use brauerbox::cli::labels::LinearLabels;
use brauerbox::modrep::{chop, perm_rep, radical_series};
use brauerbox::permgrp::{coset_action, normalizer, PermAction, SearchBound};

fn main() -> brauerbox::Result<()> {
    let f = construct::f3();
    let a8 = Arc::new(construct::a8());
    let p = construct::sylow3();
    let n = Arc::new(normalizer(&a8, &p, SearchBound::default())?);
    let labels = LinearLabels::new(&n, f)?;

    let omega8 = perm_rep(&PermAction::natural(a8.clone()), f);
    for c in chop(&omega8, 0)?.items {
        let g = green_correspondent(&c.module, &p, &n, 0)?;
        println!(
            "f({}) has dim {} label {:?}",
            c.module.dim(),
            g.module.dim(),
            labels.identify(&g.module)?
        );
    }

    let omega28 = perm_rep(&coset_action(&a8, &construct::two_subset_stabilizer())?, f);
    let thirteen = chop(&omega28, 0)?.items.into_iter().find(|c| c.module.dim() == 13).unwrap().module;
    let g = green_correspondent(&thirteen, &p, &n, 0)?;
    println!(
        "restriction of 13 to N(P) splits as {:?} with vertex orders {:?}",
        g.summand_dims, g.vertex_orders
    );
    println!("f(13) radical layers {:?}", radical_series(&g.module, 0)?.layer_dims());
    Ok(())
}
