//! Counting fixed cosets through the fusion of a subgroup.

use std::sync::Arc;

use brauerbox::brauer::{direct_fixed_count, marks_count, perm_fixed_points};
use brauerbox::cli::construct;
use brauerbox::permgrp::{fusion_data, SearchBound};

fn main() -> brauerbox::Result<()> {
    let a8 = Arc::new(construct::a8());
    let a7 = Arc::new(construct::a7());
    let p = Arc::new(construct::sylow3());

    let data = fusion_data(&a8, &a7, &p)?;
    println!("H-classes of subgroups of H that are G-conjugate to K: {}", data.t());
    for r in &data.reps {
        println!("  g_i = {}, |H-class| = {}", r.g_i, r.h_class_size);
    }
    println!("marks formula {}, direct count {}", marks_count(&a8, &a7, &p)?, direct_fixed_count(&a8, &a7, &p)?);

    let report = perm_fixed_points(&a8, &a7, &p, SearchBound::default())?;
    println!("fixed cosets split into parts of sizes {:?}", report.part_sizes());
    Ok(())
}
