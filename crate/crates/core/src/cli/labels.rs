//! Names `1a`..`1d` for the linear modules of a group `P : D8`.
//!
//! `1a` is trivial, `1b` is the nontrivial one with an element of order 4 in
//! its kernel, and `1c`, `1d` are the other two ordered lexicographically by
//! their values on the stored generators. Conjugating by an element that
//! swaps the two remaining kernels interchanges `1c` and `1d`, so these two
//! names are relative to the chosen generators.

use std::sync::Arc;

use serde::Serialize;

use crate::blocks::{linear_characters, LinearCharacter};
use crate::ffla::PrimeField;
use crate::modrep::{is_isomorphic, MatRep};
use crate::permgrp::PermGroup;
use crate::{Error, Result};

pub const SWAP_CAVEAT: &str = "1c and 1d are fixed by the lexicographic order of character values on the stored generators; an automorphism exchanging the two non-cyclic index-2 subgroups swaps them";

#[derive(Clone, Debug)]
pub struct LinearLabels {
    pub labelled: Vec<(String, LinearCharacter)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LabelRecord {
    pub label: String,
    pub values: Vec<u8>,
}

impl LinearLabels {
    pub fn new(group: &Arc<PermGroup>, field: PrimeField) -> Result<Self> {
        let chars = linear_characters(group, field)?;
        if chars.len() != 4 {
            return Err(Error::invalid(format!("expected 4 linear characters, found {}", chars.len())));
        }
        let elems = group.elements(1_000_000)?;
        let order4: Vec<_> = elems.iter().filter(|g| g.order() == 4).collect();
        let mut rest = Vec::new();
        let mut b = Vec::new();
        let mut a = None;
        for c in chars {
            if c.is_trivial() {
                a = Some(c);
                continue;
            }
            let mut has = false;
            for g in &order4 {
                if c.eval(g)? == 1 {
                    has = true;
                    break;
                }
            }
            if has {
                b.push(c);
            } else {
                rest.push(c);
            }
        }
        if b.len() != 1 || rest.len() != 2 {
            return Err(Error::invalid("no unique linear character with an order-4 element in its kernel"));
        }
        rest.sort_by(|x, y| x.values().cmp(y.values()));
        let mut labelled = vec![("1a".to_string(), a.expect("trivial character present"))];
        labelled.push(("1b".to_string(), b.remove(0)));
        for (name, c) in ["1c", "1d"].into_iter().zip(rest) {
            labelled.push((name.to_string(), c));
        }
        Ok(Self { labelled })
    }

    pub fn get(&self, label: &str) -> Option<&LinearCharacter> {
        self.labelled.iter().find(|(l, _)| l == label).map(|(_, c)| c)
    }

    /// Label of a 1-dimensional module.
    pub fn identify(&self, m: &MatRep) -> Result<Option<String>> {
        if m.dim() != 1 {
            return Ok(None);
        }
        for (l, c) in &self.labelled {
            if is_isomorphic(&c.to_rep(), m)?.is_some() {
                return Ok(Some(l.clone()));
            }
        }
        Ok(None)
    }

    pub fn records(&self) -> Vec<LabelRecord> {
        self.labelled
            .iter()
            .map(|(l, c)| LabelRecord {
                label: l.clone(),
                values: c.values().to_vec(),
            })
            .collect()
    }
}
