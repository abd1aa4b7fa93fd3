//! Idempotent file format:
//!
//! ```text
//! idem p=<p>
//! <coefficient> <element in cycle notation>
//! ```

use std::sync::Arc;

use super::GroupAlgebraElement;
use crate::ffla::io::{header_fields, header_usize, Lines};
use crate::ffla::PrimeField;
use crate::permgrp::{Perm, PermGroup};
use crate::Result;

pub fn parse_idempotent(text: &str, file: &str, group: Arc<PermGroup>) -> Result<GroupAlgebraElement> {
    let mut lines = Lines::new(text, file);
    let (ln, header) = lines.expect_line("idem header")?;
    let fields = header_fields(header, "idem", file, ln)?;
    let p = header_usize(&fields, "p", file, ln)?;
    let field = PrimeField::new(p as u32).map_err(|e| lines.err(ln, e.to_string()))?;
    let mut terms = Vec::new();
    while let Some((ln, line)) = lines.next_line() {
        let (c, g) = line
            .split_once(char::is_whitespace)
            .ok_or_else(|| lines.err(ln, "expected `<coefficient> <element>`"))?;
        let c: u64 = c.parse().map_err(|_| lines.err(ln, format!("bad coefficient `{c}`")))?;
        if c >= p as u64 {
            return Err(lines.err(ln, format!("coefficient {c} not in [0,{p})")));
        }
        let g = Perm::parse(g, group.degree()).map_err(|e| lines.err(ln, e.to_string()))?;
        if !group.contains(&g) {
            return Err(lines.err(ln, format!("{g} is not in the group")));
        }
        terms.push((g, c as u8));
    }
    GroupAlgebraElement::new(group, field, terms)
}

pub fn write_idempotent(e: &GroupAlgebraElement) -> String {
    let mut out = format!("idem p={}\n", e.field().p());
    for (g, c) in e.terms() {
        out.push_str(&format!("{c} {g}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::{idempotent_from_character, LinearCharacter};

    #[test]
    fn round_trip() {
        let f = PrimeField::new(3).unwrap();
        let e = Arc::new(PermGroup::from_cycles(4, &["(1,2)", "(3,4)"]).unwrap());
        let idem = idempotent_from_character(&LinearCharacter::trivial(e.clone(), f)).unwrap();
        let text = write_idempotent(&idem);
        assert_eq!(parse_idempotent(&text, "e.idem", e.clone()).unwrap(), idem);
        assert!(parse_idempotent("idem p=3\n1 (1,5)\n", "e.idem", e).is_err());
    }
}
