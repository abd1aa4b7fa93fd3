//! Representation file format:
//!
//! ```text
//! matrep p=<p> dim=<d> gens=<m>
//! <m matrices in the fpmat format>
//! ```

use std::sync::Arc;

use super::rep::MatRep;
use crate::ffla::io::{header_fields, header_usize, read_matrix_block, write_matrix, Lines};
use crate::ffla::PrimeField;
use crate::permgrp::PermGroup;
use crate::{Error, Result};

/// Parses a representation; with a group the matrices are validated against it.
pub fn parse_rep(text: &str, file: &str, group: Option<Arc<PermGroup>>) -> Result<MatRep> {
    let mut lines = Lines::new(text, file);
    let (ln, header) = lines.expect_line("matrep header")?;
    let fields = header_fields(header, "matrep", file, ln)?;
    let p = header_usize(&fields, "p", file, ln)?;
    let dim = header_usize(&fields, "dim", file, ln)?;
    let gens = header_usize(&fields, "gens", file, ln)?;
    let field = PrimeField::new(p as u32).map_err(|e| lines.err(ln, e.to_string()))?;
    let mut mats = Vec::with_capacity(gens);
    for _ in 0..gens {
        let start = lines.last + 1;
        let m = read_matrix_block(&mut lines)?;
        if m.p() as usize != p || m.rows() != dim || m.cols() != dim {
            return Err(lines.err(start, format!("expected a {dim}x{dim} matrix over F_{p}")));
        }
        mats.push(m);
    }
    if let Some((ln, _)) = lines.next_line() {
        return Err(lines.err(ln, "trailing content after the last matrix"));
    }
    MatRep::new(group, field, dim, mats).map_err(|e| match e {
        Error::Parse { .. } => e,
        other => Error::Parse {
            file: file.to_string(),
            line: 1,
            msg: other.to_string(),
        },
    })
}

pub fn write_rep(rep: &MatRep) -> String {
    let mut out = format!("matrep p={} dim={} gens={}\n", rep.p(), rep.dim(), rep.mats().len());
    for m in rep.mats() {
        out.push_str(&write_matrix(m));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modrep::perm_rep;
    use crate::permgrp::PermAction;

    #[test]
    fn round_trip() {
        let g = Arc::new(PermGroup::from_cycles(3, &["(1,2,3)", "(1,2)"]).unwrap());
        let v = perm_rep(&PermAction::natural(g.clone()), PrimeField::new(3).unwrap());
        let text = write_rep(&v);
        let w = parse_rep(&text, "v.rep", Some(g)).unwrap();
        assert_eq!(w.mats(), v.mats());
        let bad = text.replace("gens=2", "gens=3");
        assert!(matches!(parse_rep(&bad, "v.rep", None), Err(Error::Parse { .. })));
    }
}
