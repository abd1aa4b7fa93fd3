use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::permgrp::{
    canonical_coset_rep, enumerate_cosets, fusion_data, normalizer, verify_double_cosets, FusionData, Perm, PermAction,
    PermGroup, SearchBound,
};
use crate::{Error, Result};

/// One `N_G(K)`-orbit on `Omega^K`, the points `H g_i n`.
#[derive(Clone, Debug, Serialize)]
pub struct FixedPointPart {
    /// Generators of `K_i`, cycle notation.
    pub k_i: Vec<String>,
    pub g_i: String,
    /// `|N_G(K)| / |N_H(K_i)|`.
    pub expected_size: u128,
    /// Positions in [`FixedPointReport::points`].
    pub orbit: Vec<usize>,
}

/// `K`-fixed cosets of `H` in `G` with their decomposition under `N_G(K)`.
#[derive(Clone, Debug)]
pub struct FixedPointReport {
    pub normalizer: Arc<PermGroup>,
    /// Indices of the fixed cosets in the enumeration of `H \ G`.
    pub points: Vec<usize>,
    /// Coset representatives of the fixed points, cycle notation.
    pub labels: Vec<String>,
    pub parts: Vec<FixedPointPart>,
    /// `N_G(K)` acting on `Omega^K`; `None` when there are no fixed points.
    pub action: Option<PermAction>,
    pub fusion: FusionData,
}

impl FixedPointReport {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn part_sizes(&self) -> Vec<usize> {
        self.parts.iter().map(|p| p.orbit.len()).collect()
    }
}

/// `sum_i |N_G(K)| / |N_H(K_i)|`.
pub fn marks_count(g: &Arc<PermGroup>, h: &Arc<PermGroup>, k: &Arc<PermGroup>) -> Result<u128> {
    Ok(fusion_data(g, h, k)?.marks())
}

/// Number of `K`-fixed points of `G` acting on `H \ G`, by scanning the cosets.
pub fn direct_fixed_count(g: &PermGroup, h: &PermGroup, k: &PermGroup) -> Result<usize> {
    let (reps, _) = enumerate_cosets(g, h)?;
    Ok(reps
        .iter()
        .filter(|r| {
            let c = canonical_coset_rep(h, r);
            k.gens().iter().all(|x| canonical_coset_rep(h, &r.mul(x)) == c)
        })
        .count())
}

/// Fixed points of `K` on `H \ G` split into the parts `H g_i N_G(K)`.
pub fn perm_fixed_points(
    g: &Arc<PermGroup>,
    h: &Arc<PermGroup>,
    k: &Arc<PermGroup>,
    bound: SearchBound,
) -> Result<FixedPointReport> {
    let fusion = fusion_data(g, h, k)?;
    let n = Arc::new(normalizer(g, k, bound)?);
    if !verify_double_cosets(&fusion, &n)? {
        return Err(Error::invalid("double cosets H g_i N_G(K) are not distinct"));
    }
    let (reps, _) = enumerate_cosets(g, h)?;
    let index: HashMap<Perm, usize> = reps
        .iter()
        .enumerate()
        .map(|(i, r)| (canonical_coset_rep(h, r), i))
        .collect();
    let coset_of = |x: &Perm| index[&canonical_coset_rep(h, x)];

    let mut points: Vec<usize> = Vec::new();
    let mut position: HashMap<usize, usize> = HashMap::new();
    let mut parts = Vec::new();
    for (i, rep) in fusion.reps.iter().enumerate() {
        let start = coset_of(&rep.g_i);
        if position.contains_key(&start) {
            return Err(Error::invalid("fusion representatives share a coset orbit"));
        }
        let first = points.len();
        position.insert(start, first);
        points.push(start);
        let mut j = first;
        while j < points.len() {
            let here = reps[points[j]].clone();
            for s in n.gens() {
                let c = coset_of(&here.mul(s));
                if let std::collections::hash_map::Entry::Vacant(e) = position.entry(c) {
                    e.insert(points.len());
                    points.push(c);
                }
            }
            j += 1;
        }
        let expected_size = fusion.normalizer_order() / fusion.h_normalizer_order(i);
        if (points.len() - first) as u128 != expected_size {
            return Err(Error::invalid(format!(
                "part {i} has {} points, expected {expected_size}",
                points.len() - first
            )));
        }
        parts.push(FixedPointPart {
            k_i: rep.k_i.gens().iter().map(|x| x.to_string()).collect(),
            g_i: rep.g_i.to_string(),
            expected_size,
            orbit: (first..points.len()).collect(),
        });
    }
    for &pt in &points {
        if !k.gens().iter().all(|x| coset_of(&reps[pt].mul(x)) == pt) {
            return Err(Error::invalid("a part contains a coset not fixed by K"));
        }
    }
    if points.len() != direct_fixed_count(g, h, k)? {
        return Err(Error::invalid("parts do not exhaust the fixed points"));
    }
    let action = if points.is_empty() {
        None
    } else {
        let images = n
            .gens()
            .iter()
            .map(|s| {
                let img: Vec<usize> = points.iter().map(|&pt| position[&coset_of(&reps[pt].mul(s))]).collect();
                Perm::from_images(img)
            })
            .collect::<Result<Vec<_>>>()?;
        let labels = points.iter().map(|&pt| format!("H{}", reps[pt])).collect();
        Some(PermAction::new(n.clone(), images, Some(labels))?)
    };
    let labels = points.iter().map(|&pt| reps[pt].to_string()).collect();
    Ok(FixedPointReport {
        normalizer: n,
        points,
        labels,
        parts,
        action,
        fusion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a8_a7_p() {
        let g = Arc::new(PermGroup::alternating(8));
        let h = Arc::new(g.stabilizer(&[7]).unwrap());
        let k = Arc::new(PermGroup::from_cycles(8, &["(1,2,3)", "(4,5,6)"]).unwrap());
        assert_eq!(marks_count(&g, &h, &k).unwrap(), 2);
        let rep = perm_fixed_points(&g, &h, &k, SearchBound::default()).unwrap();
        assert_eq!(rep.part_sizes(), vec![2]);
        assert_eq!(rep.parts[0].expected_size, 72 / 36);
        assert!(rep.action.as_ref().unwrap().is_transitive());
        let triv = Arc::new(PermGroup::trivial(8));
        assert_eq!(marks_count(&g, &h, &triv).unwrap(), 8);
    }

    #[test]
    fn not_subconjugate() {
        let g = Arc::new(PermGroup::symmetric(5));
        let h = Arc::new(PermGroup::alternating(5));
        let k = Arc::new(PermGroup::from_cycles(5, &["(1,2)"]).unwrap());
        let rep = perm_fixed_points(&g, &h, &k, SearchBound::default()).unwrap();
        assert!(rep.is_empty());
        assert!(rep.action.is_none());
        assert_eq!(marks_count(&g, &h, &k).unwrap(), 0);
    }
}
