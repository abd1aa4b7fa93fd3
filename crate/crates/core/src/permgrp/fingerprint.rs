//! Cheap isomorphism invariants of small groups.

use std::collections::BTreeMap;

use serde::Serialize;

use super::group::PermGroup;
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub order: u128,
    /// `|G / [G,G]|`.
    pub abelianization: u128,
    pub center: u128,
    /// Element order -> number of elements of that order.
    pub order_histogram: BTreeMap<u64, usize>,
}

pub fn fingerprint(g: &PermGroup, bound: u128) -> Result<Fingerprint> {
    let elems = g.elements(bound)?;
    let mut order_histogram = BTreeMap::new();
    let mut center = 0;
    for x in &elems {
        *order_histogram.entry(x.order()).or_insert(0) += 1;
        if g.gens().iter().all(|s| s.mul(x) == x.mul(s)) {
            center += 1;
        }
    }
    Ok(Fingerprint {
        order: g.order(),
        abelianization: g.order() / g.derived_subgroup().order(),
        center,
        order_histogram,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_group_invariants() {
        let f = fingerprint(&PermGroup::symmetric(4), 100).unwrap();
        assert_eq!((f.order, f.abelianization, f.center), (24, 2, 1));
        assert_eq!(f.order_histogram.get(&2), Some(&9));
    }
}
