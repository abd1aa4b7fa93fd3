//! Subgroups of `H` that are `G`-conjugate to `K`, up to `H`-conjugacy.

use std::collections::HashMap;
use std::sync::Arc;

use super::action::canonical_coset_rep;
use super::group::PermGroup;
use super::perm::Perm;
use crate::{Error, Result};

/// Largest `|K| * |G : N_G(K)|` handled by the conjugate enumeration.
pub const MAX_CONJUGATE_ELEMENTS: u128 = 5_000_000;

/// One representative `K_i <= H` with `K_i^{g_i} = K`.
#[derive(Clone, Debug)]
pub struct FusionRep {
    pub k_i: Arc<PermGroup>,
    pub g_i: Perm,
    /// Size of the `H`-conjugacy class of `K_i`.
    pub h_class_size: u128,
}

#[derive(Clone, Debug)]
pub struct FusionData {
    pub g: Arc<PermGroup>,
    pub h: Arc<PermGroup>,
    pub k: Arc<PermGroup>,
    pub reps: Vec<FusionRep>,
    /// Size of the `G`-conjugacy class of `K`.
    pub g_class_size: u128,
}

impl FusionData {
    pub fn t(&self) -> usize {
        self.reps.len()
    }

    /// `|N_G(K)|`.
    pub fn normalizer_order(&self) -> u128 {
        self.g.order() / self.g_class_size
    }

    /// `|N_H(K_i)|`.
    pub fn h_normalizer_order(&self, i: usize) -> u128 {
        self.h.order() / self.reps[i].h_class_size
    }

    /// `sum_i |N_G(K)| / |N_H(K_i)|`.
    pub fn marks(&self) -> u128 {
        (0..self.t())
            .map(|i| self.normalizer_order() / self.h_normalizer_order(i))
            .sum()
    }
}

fn element_key(elems: &[Perm]) -> Vec<Perm> {
    let mut v = elems.to_vec();
    v.sort_unstable();
    v
}

/// Computes `K_i`, `g_i` by enumerating the `G`-class of `K` and splitting
/// the members lying in `H` into `H`-classes.
pub fn fusion_data(g: &Arc<PermGroup>, h: &Arc<PermGroup>, k: &Arc<PermGroup>) -> Result<FusionData> {
    if !h.is_subgroup_of(g) || !k.is_subgroup_of(g) {
        return Err(Error::NotSubgroup("fusion data needs H, K <= G".into()));
    }
    let kelems = k.elements(MAX_CONJUGATE_ELEMENTS)?;
    // G-class of K, each member with an element c such that K^c is the member
    let mut index: HashMap<Vec<Perm>, usize> = HashMap::new();
    let mut members: Vec<(Vec<Perm>, Perm)> = vec![(kelems.clone(), g.identity())];
    index.insert(element_key(&kelems), 0);
    let mut i = 0;
    while i < members.len() {
        for s in g.gens() {
            let conj: Vec<Perm> = members[i].0.iter().map(|x| x.conj(s)).collect();
            let key = element_key(&conj);
            if !index.contains_key(&key) {
                if (members.len() as u128 + 1) * kelems.len() as u128 > MAX_CONJUGATE_ELEMENTS {
                    return Err(Error::BoundExceeded("conjugacy class of K too large".into()));
                }
                index.insert(key, members.len());
                let c = members[i].1.mul(s);
                members.push((conj, c));
            }
        }
        i += 1;
    }
    let g_class_size = members.len() as u128;
    let inside: Vec<usize> = (0..members.len())
        .filter(|&m| members[m].0.iter().all(|x| h.contains(x)))
        .collect();
    let mut class_of: HashMap<usize, usize> = HashMap::new();
    let mut reps = Vec::new();
    for &m in &inside {
        if class_of.contains_key(&m) {
            continue;
        }
        let c = reps.len();
        class_of.insert(m, c);
        let mut orbit = vec![m];
        let mut j = 0;
        while j < orbit.len() {
            for s in h.gens() {
                let conj: Vec<Perm> = members[orbit[j]].0.iter().map(|x| x.conj(s)).collect();
                let n = index[&element_key(&conj)];
                if let std::collections::hash_map::Entry::Vacant(e) = class_of.entry(n) {
                    e.insert(c);
                    orbit.push(n);
                }
            }
            j += 1;
        }
        let k_i = PermGroup::new(g.degree(), k.gens().iter().map(|x| x.conj(&members[m].1)).collect())?;
        reps.push(FusionRep {
            k_i: Arc::new(k_i),
            g_i: members[m].1.inv(),
            h_class_size: orbit.len() as u128,
        });
    }
    let data = FusionData {
        g: g.clone(),
        h: h.clone(),
        k: k.clone(),
        reps,
        g_class_size,
    };
    verify_fusion(&data)?;
    Ok(data)
}

/// Whether `x` and `y` lie in the same double coset `H x N`.
pub fn same_double_coset(h: &PermGroup, n: &PermGroup, x: &Perm, y: &Perm, bound: usize) -> Result<bool> {
    let target = canonical_coset_rep(h, y);
    let start = canonical_coset_rep(h, x);
    let mut seen = std::collections::HashSet::new();
    seen.insert(start.clone());
    let mut queue = vec![start];
    let mut i = 0;
    while i < queue.len() {
        if queue[i] == target {
            return Ok(true);
        }
        for s in n.gens() {
            let c = canonical_coset_rep(h, &queue[i].mul(s));
            if seen.insert(c.clone()) {
                if seen.len() > bound {
                    return Err(Error::BoundExceeded("double coset too large".into()));
                }
                queue.push(c);
            }
        }
        i += 1;
    }
    Ok(false)
}

/// Re-checks `K_i^{g_i} = K` and, given `N_G(K)`, distinctness of the double cosets `H g_i N_G(K)`.
pub fn verify_fusion(data: &FusionData) -> Result<()> {
    for r in &data.reps {
        if !data.g.contains(&r.g_i) || !r.k_i.conjugate(&r.g_i).same_group(&data.k) || !r.k_i.is_subgroup_of(&data.h) {
            return Err(Error::invalid("fusion representative fails K_i^g_i = K"));
        }
    }
    Ok(())
}

/// Checks pairwise distinctness of `H g_i N` for a supplied `N = N_G(K)`.
pub fn verify_double_cosets(data: &FusionData, n: &PermGroup) -> Result<bool> {
    for i in 0..data.t() {
        for j in 0..i {
            if same_double_coset(&data.h, n, &data.reps[i].g_i, &data.reps[j].g_i, 10_000_000)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgrp::search::{normalizer, SearchBound};

    #[test]
    fn a8_a7_p() {
        let g = Arc::new(PermGroup::alternating(8));
        let h = Arc::new(g.stabilizer(&[7]).unwrap());
        let k = Arc::new(PermGroup::from_cycles(8, &["(1,2,3)", "(4,5,6)"]).unwrap());
        let f = fusion_data(&g, &h, &k).unwrap();
        assert_eq!(f.t(), 1);
        assert!(f.reps[0].g_i.is_identity());
        assert!(f.reps[0].k_i.same_group(&k));
        assert_eq!(f.marks(), 2);
    }

    #[test]
    fn not_subconjugate_and_whole_group() {
        let g = Arc::new(PermGroup::alternating(6));
        let h = Arc::new(g.stabilizer(&[5]).unwrap());
        let k = Arc::new(PermGroup::from_cycles(6, &["(1,2,3)(4,5,6)"]).unwrap());
        // (1,2,3)(4,5,6) moves all six points, as do all its conjugates
        assert_eq!(fusion_data(&g, &h, &k).unwrap().t(), 0);
        let f = fusion_data(&g, &g, &k).unwrap();
        assert_eq!(f.t(), 1);
        assert!(f.reps[0].k_i.same_group(&k));
    }

    #[test]
    fn several_classes_with_distinct_double_cosets() {
        let g = Arc::new(PermGroup::symmetric(6));
        let h = Arc::new(PermGroup::from_cycles(6, &["(1,2)", "(1,2,3,4)", "(5,6)"]).unwrap());
        let k = Arc::new(PermGroup::from_cycles(6, &["(1,2)"]).unwrap());
        let f = fusion_data(&g, &h, &k).unwrap();
        // transpositions inside S4 x S2 form two H-classes
        assert_eq!(f.t(), 2);
        let n = normalizer(&g, &k, SearchBound::default()).unwrap();
        assert!(verify_double_cosets(&f, &n).unwrap());
    }
}
