//! Group file format:
//!
//! ```text
//! permgroup degree=<n>
//! (1,2,3)(4,5,6)
//! ()
//! ```

use super::group::PermGroup;
use super::perm::Perm;
use crate::ffla::io::{header_fields, header_usize, Lines};
use crate::Result;

/// Generators listed in a group file.
pub fn parse_generators(text: &str, file: &str) -> Result<(usize, Vec<Perm>)> {
    let mut lines = Lines::new(text, file);
    let (ln, header) = lines.expect_line("permgroup header")?;
    let fields = header_fields(header, "permgroup", file, ln)?;
    let degree = header_usize(&fields, "degree", file, ln)?;
    let mut gens = Vec::new();
    while let Some((ln, line)) = lines.next_line() {
        if line.starts_with('#') {
            continue;
        }
        gens.push(Perm::parse(line, degree).map_err(|e| lines.err(ln, e.to_string()))?);
    }
    Ok((degree, gens))
}

pub fn parse_group(text: &str, file: &str) -> Result<PermGroup> {
    let (degree, gens) = parse_generators(text, file)?;
    PermGroup::new(degree, gens)
}

pub fn write_group(g: &PermGroup) -> String {
    write_generators(g.degree(), g.gens())
}

pub fn write_generators(degree: usize, gens: &[Perm]) -> String {
    let mut out = format!("permgroup degree={degree}\n");
    for g in gens {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    #[test]
    fn round_trip_and_errors() {
        let g = PermGroup::from_cycles(8, &["(1,2,3)", "(4,5,6)", "()"]).unwrap();
        let text = write_group(&g);
        assert_eq!(text, "permgroup degree=8\n(1,2,3)\n(4,5,6)\n()\n");
        assert_eq!(parse_group(&text, "p.grp").unwrap().order(), 9);
        match parse_group("permgroup degree=3\n(1,2)\n(1,4)\n", "bad.grp").unwrap_err() {
            Error::Parse { file, line, .. } => assert_eq!((file.as_str(), line), ("bad.grp", 3)),
            e => panic!("{e}"),
        }
    }
}
