//! Shipped data files: location, loading and regeneration.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use super::construct::{self, f3};
use crate::blocks::io::{parse_idempotent, write_idempotent};
use crate::blocks::GroupAlgebraElement;
use crate::brauer::green_trivial_source;
use crate::modrep::io::{parse_rep, write_rep};
use crate::modrep::{perm_rep, MatRep};
use crate::permgrp::io::{parse_group, write_group};
use crate::permgrp::{PermAction, PermGroup, SearchBound};
use crate::{Error, Result};

/// Environment variable overriding the data directory.
pub const DATA_ENV: &str = "BRAUERBOX_DATA";

pub fn data_dir() -> PathBuf {
    match std::env::var_os(DATA_ENV) {
        Some(d) => PathBuf::from(d),
        None => PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data"),
    }
}

/// Resolves a name against the data directory unless it is an existing path.
pub fn resolve(name: &str) -> PathBuf {
    let p = Path::new(name);
    if p.is_absolute() || p.exists() {
        p.to_path_buf()
    } else {
        data_dir().join(p)
    }
}

pub fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(path.display().to_string(), e))
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Io(path.display().to_string(), e))
}

pub fn load_group(path: &Path) -> Result<Arc<PermGroup>> {
    let text = read_text(path)?;
    Ok(Arc::new(parse_group(&text, &path.display().to_string())?))
}

pub fn load_rep(path: &Path, group: Option<Arc<PermGroup>>) -> Result<MatRep> {
    let text = read_text(path)?;
    parse_rep(&text, &path.display().to_string(), group)
}

pub fn load_idempotent(path: &Path, group: Arc<PermGroup>) -> Result<GroupAlgebraElement> {
    let text = read_text(path)?;
    parse_idempotent(&text, &path.display().to_string(), group)
}

/// Contents of every generated data file, by file name.
pub fn generate(bound: SearchBound) -> Result<Vec<(&'static str, String)>> {
    let a8 = Arc::new(construct::a8());
    let p = construct::sylow3();
    let hprime = Arc::new(construct::a8_hprime(bound)?);
    let omega8 = perm_rep(&PermAction::natural(a8.clone()), f3());
    let d8modc4 = green_trivial_source(&omega8, &p, &hprime)?.module;
    let local = construct::local_groups()?;
    let idem = construct::hprime_fixed_idempotent(&local)?;
    Ok(vec![
        ("a8.grp", write_group(&a8)),
        ("a7.grp", write_group(&construct::a7())),
        ("p.grp", write_group(&p)),
        ("hprime.grp", write_group(&hprime)),
        ("two_subsets.grp", write_group(&construct::two_subset_stabilizer())),
        ("omega8.rep", write_rep(&omega8)),
        ("d8modc4.rep", write_rep(&d8modc4)),
        ("n.grp", write_group(&local.n)),
        ("ntilde.grp", write_group(&local.ntilde)),
        ("hprime_n.grp", write_group(&local.hprime)),
        ("h.grp", write_group(&local.h)),
        ("e.grp", write_group(&local.e)),
        ("p_n.grp", write_group(&local.p)),
        ("e12.idem", write_idempotent(&idem)),
    ])
}

/// Writes the generated files into `dir`, returning their paths.
pub fn bootstrap(dir: &Path, bound: SearchBound) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir).map_err(|e| Error::Io(dir.display().to_string(), e))?;
    let mut out = Vec::new();
    for (name, text) in generate(bound)? {
        let path = dir.join(name);
        write_text(&path, &text)?;
        out.push(path);
    }
    Ok(out)
}
