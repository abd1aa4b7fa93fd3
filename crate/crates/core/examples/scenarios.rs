//! Runs the shipped scenarios and prints each check.

use brauerbox::cli::{run_named, Timer, SCENARIOS};
use brauerbox::permgrp::SearchBound;

fn main() -> brauerbox::Result<()> {
    for name in SCENARIOS {
        let mut timer = Timer::new(true);
        let out = run_named(name, SearchBound::default(), &mut timer)?;
        println!("{name}: {}", if out.passed() { "PASS" } else { "FAIL" });
        for c in &out.checks {
            println!("  [{}] {} = {}", if c.pass { "ok" } else { "!!" }, c.name, c.actual);
        }
        for n in &out.notes {
            println!("  note: {n}");
        }
    }
    Ok(())
}
