//! Backtrack searches over a stabilizer chain: normalizers and conjugating
//! elements; Sylow subgroups; small subgroup lattices.

use std::collections::{BTreeSet, HashSet};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::group::PermGroup;
use super::perm::Perm;
use crate::{Error, Result};

/// Hard limits for backtrack searches.
#[derive(Clone, Copy, Debug)]
pub struct SearchBound {
    pub max_order: u128,
    pub max_degree: usize,
}

impl Default for SearchBound {
    fn default() -> Self {
        Self {
            max_order: 10_000_000,
            max_degree: 10_000,
        }
    }
}

impl SearchBound {
    pub fn check(&self, g: &PermGroup) -> Result<()> {
        if g.order() > self.max_order {
            return Err(Error::BoundExceeded(format!(
                "group order {} above {}",
                g.order(),
                self.max_order
            )));
        }
        if g.degree() > self.max_degree {
            return Err(Error::BoundExceeded(format!(
                "degree {} above {}",
                g.degree(),
                self.max_degree
            )));
        }
        Ok(())
    }
}

/// Orbit index and orbit length of every point.
fn orbit_data(k: &PermGroup) -> (Vec<usize>, Vec<usize>) {
    let mut id = vec![0; k.degree()];
    let mut len = vec![0; k.degree()];
    for (i, o) in k.orbits().into_iter().enumerate() {
        for &x in &o {
            id[x] = i;
            len[x] = o.len();
        }
    }
    (id, len)
}

/// Depth-first search over `g` for elements mapping the orbit structure of
/// `k1` onto that of `k2`; `leaf` returns `true` to stop.
fn backtrack(g: &PermGroup, k1: &PermGroup, k2: &PermGroup, leaf: &mut dyn FnMut(&Perm) -> bool) {
    let (id1, len1) = orbit_data(k1);
    let (id2, len2) = orbit_data(k2);
    let levels = g.levels();
    let base: Vec<usize> = levels.iter().map(|l| l.base).collect();
    let mut images: Vec<usize> = Vec::with_capacity(base.len());

    fn consistent(base: &[usize], images: &[usize], id1: &[usize], len1: &[usize], id2: &[usize], len2: &[usize]) -> bool {
        let l = images.len() - 1;
        let (b, x) = (base[l], images[l]);
        if len1[b] != len2[x] {
            return false;
        }
        (0..l).all(|i| (id1[base[i]] == id1[b]) == (id2[images[i]] == id2[x]))
    }

    #[allow(clippy::too_many_arguments)]
    fn go(
        g: &PermGroup,
        depth: usize,
        suffix: &Perm,
        base: &[usize],
        images: &mut Vec<usize>,
        data: (&[usize], &[usize], &[usize], &[usize]),
        leaf: &mut dyn FnMut(&Perm) -> bool,
    ) -> bool {
        let levels = g.levels();
        if depth == levels.len() {
            return leaf(suffix);
        }
        let lev = &levels[depth];
        let mut cands: Vec<(usize, usize)> = lev
            .orbit
            .iter()
            .map(|&gamma| (suffix.image(gamma), gamma))
            .collect();
        cands.sort_unstable();
        for (img, gamma) in cands {
            images.push(img);
            if consistent(base, images, data.0, data.1, data.2, data.3) {
                let u = &lev.trans[gamma].as_ref().unwrap().perm;
                let next = u.mul(suffix);
                if go(g, depth + 1, &next, base, images, data, leaf) {
                    images.pop();
                    return true;
                }
            }
            images.pop();
        }
        let _ = levels;
        false
    }

    let _ = levels;
    go(
        g,
        0,
        &g.identity(),
        &base,
        &mut images,
        (&id1, &len1, &id2, &len2),
        leaf,
    );
}

fn conjugates_into(k1: &PermGroup, k2: &PermGroup, x: &Perm) -> bool {
    k1.gens().iter().all(|s| k2.contains(&s.conj(x)))
}

/// `N_G(K) = {g in G : K^g = K}`.
pub fn normalizer(g: &PermGroup, k: &PermGroup, bound: SearchBound) -> Result<PermGroup> {
    if !k.is_subgroup_of(g) {
        return Err(Error::NotSubgroup("normalizer needs K <= G".into()));
    }
    if k.is_normal_in(g) {
        return PermGroup::new(g.degree(), g.gens().to_vec());
    }
    bound.check(g)?;
    let mut gens: Vec<Perm> = k.gens().to_vec();
    let mut n = PermGroup::new(g.degree(), gens.clone())?;
    backtrack(g, k, k, &mut |x| {
        if !n.contains(x) && conjugates_into(k, k, x) {
            gens.push(x.clone());
            n = PermGroup::new(g.degree(), gens.clone()).expect("same degree");
        }
        false
    });
    Ok(n)
}

/// Some `x in G` with `K1^x = K2`, or `None` when the two are not conjugate in `G`.
pub fn conjugating_element(g: &PermGroup, k1: &PermGroup, k2: &PermGroup, bound: SearchBound) -> Result<Option<Perm>> {
    if !k1.is_subgroup_of(g) || !k2.is_subgroup_of(g) {
        return Err(Error::NotSubgroup("conjugacy test needs both subgroups in G".into()));
    }
    if k1.order() != k2.order() {
        return Ok(None);
    }
    let mut l1: Vec<usize> = k1.orbits().iter().map(|o| o.len()).collect();
    let mut l2: Vec<usize> = k2.orbits().iter().map(|o| o.len()).collect();
    l1.sort_unstable();
    l2.sort_unstable();
    if l1 != l2 {
        return Ok(None);
    }
    if conjugates_into(k1, k2, &g.identity()) {
        return Ok(Some(g.identity()));
    }
    bound.check(g)?;
    let mut found = None;
    backtrack(g, k1, k2, &mut |x| {
        if conjugates_into(k1, k2, x) {
            found = Some(x.clone());
            true
        } else {
            false
        }
    });
    Ok(found)
}

/// Largest power of `p` dividing `n`.
pub fn p_part(n: u128, p: u64) -> u128 {
    let p = p as u128;
    let mut n = n;
    let mut acc = 1;
    while n > 0 && n % p == 0 {
        n /= p;
        acc *= p;
    }
    acc
}

/// A Sylow `p`-subgroup: grow from the trivial group by adjoining elements
/// of order `p` modulo the current subgroup found in its normalizer.
pub fn sylow(g: &PermGroup, p: u64, seed: u64, bound: SearchBound) -> Result<PermGroup> {
    if !crate::ffla::PrimeField::new(p as u32).is_ok() {
        return Err(Error::NotPrime(p as u32));
    }
    let target = p_part(g.order(), p);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut s = PermGroup::trivial(g.degree());
    let mut gens: Vec<Perm> = Vec::new();
    while s.order() < target {
        let n = normalizer(g, &s, bound)?;
        let mut grown = false;
        for _ in 0..10_000 {
            let x = n.random_element(&mut rng);
            // order of x modulo s
            let mut m = 1u64;
            let mut y = x.clone();
            while !s.contains(&y) {
                y = y.mul(&x);
                m += 1;
            }
            if m % p == 0 {
                let z = x.pow((m / p) as i64);
                gens.push(z);
                s = PermGroup::new(g.degree(), gens.clone())?;
                grown = true;
                break;
            }
        }
        if !grown {
            return Err(Error::Inconclusive("no p-element found in normalizer".into()));
        }
    }
    Ok(s)
}

/// All subgroups of a small group, as generated groups (deduplicated by element set).
pub fn all_subgroups(g: &PermGroup, bound: u128) -> Result<Vec<PermGroup>> {
    let elems = g.elements(bound)?;
    let key = |h: &PermGroup| -> BTreeSet<Perm> { h.elements(bound).unwrap().into_iter().collect() };
    let mut seen: HashSet<Vec<Perm>> = HashSet::new();
    let mut subs: Vec<(Vec<Perm>, PermGroup)> = Vec::new();
    let mut push = |gens: Vec<Perm>, subs: &mut Vec<(Vec<Perm>, PermGroup)>| -> Result<()> {
        let h = PermGroup::new(g.degree(), gens.clone())?;
        let k: Vec<Perm> = key(&h).into_iter().collect();
        if seen.insert(k) {
            subs.push((gens, h));
        }
        Ok(())
    };
    push(vec![], &mut subs)?;
    for x in &elems {
        if !x.is_identity() {
            push(vec![x.clone()], &mut subs)?;
        }
    }
    let cyclic = subs.len();
    let mut i = 0;
    while i < subs.len() {
        for c in 1..cyclic {
            let x = &subs[c].0[0];
            if subs[i].1.contains(x) {
                continue;
            }
            let mut gens = subs[i].0.clone();
            gens.push(x.clone());
            push(gens, &mut subs)?;
        }
        i += 1;
    }
    Ok(subs.into_iter().map(|(_, h)| h).collect())
}

/// Subgroups of index `p` in a `p`-group.
pub fn maximal_subgroups_of_p_group(pg: &PermGroup, p: u64, bound: u128) -> Result<Vec<PermGroup>> {
    if pg.order() == 1 {
        return Ok(Vec::new());
    }
    Ok(all_subgroups(pg, bound)?
        .into_iter()
        .filter(|h| h.order() * p as u128 == pg.order())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a8() -> PermGroup {
        PermGroup::alternating(8)
    }

    #[test]
    fn normalizers_in_alternating_groups() {
        let g = a8();
        let p = PermGroup::from_cycles(8, &["(1,2,3)", "(4,5,6)"]).unwrap();
        let n = normalizer(&g, &p, SearchBound::default()).unwrap();
        assert_eq!(n.order(), 72);
        assert!(p.is_normal_in(&n));
        let a7 = g.stabilizer(&[7]).unwrap();
        assert_eq!(normalizer(&a7, &p, SearchBound::default()).unwrap().order(), 36);
        assert_eq!(normalizer(&g, &g, SearchBound::default()).unwrap().order(), 20160);
    }

    #[test]
    fn conjugacy_search() {
        let g = a8();
        let k1 = PermGroup::from_cycles(8, &["(1,2,3)"]).unwrap();
        let k2 = PermGroup::from_cycles(8, &["(4,5,6)"]).unwrap();
        let x = conjugating_element(&g, &k1, &k2, SearchBound::default()).unwrap().unwrap();
        assert!(g.contains(&x));
        assert!(k1.conjugate(&x).same_group(&k2));
        let k3 = PermGroup::from_cycles(8, &["(1,2,3)(4,5,6)"]).unwrap();
        assert!(conjugating_element(&g, &k1, &k3, SearchBound::default()).unwrap().is_none());
        let id = conjugating_element(&g, &k1, &k1, SearchBound::default()).unwrap().unwrap();
        assert!(id.is_identity());
    }

    #[test]
    fn sylow_orders() {
        let g = a8();
        assert_eq!(sylow(&g, 3, 1, SearchBound::default()).unwrap().order(), 9);
        assert_eq!(sylow(&g, 7, 1, SearchBound::default()).unwrap().order(), 7);
        assert_eq!(sylow(&g, 2, 1, SearchBound::default()).unwrap().order(), 64);
        let c3 = PermGroup::from_cycles(3, &["(1,2,3)"]).unwrap();
        assert_eq!(sylow(&c3, 2, 0, SearchBound::default()).unwrap().order(), 1);
    }

    #[test]
    fn subgroup_lattice_of_small_groups() {
        // S3 has 6 subgroups, C3 x C3 has 6
        assert_eq!(all_subgroups(&PermGroup::symmetric(3), 100).unwrap().len(), 6);
        let p = PermGroup::from_cycles(6, &["(1,2,3)", "(4,5,6)"]).unwrap();
        assert_eq!(all_subgroups(&p, 100).unwrap().len(), 6);
        assert_eq!(maximal_subgroups_of_p_group(&p, 3, 100).unwrap().len(), 4);
        assert_eq!(all_subgroups(&PermGroup::symmetric(4), 100).unwrap().len(), 30);
    }

    #[test]
    fn bounds_are_enforced() {
        let s12 = PermGroup::symmetric(12);
        let k = PermGroup::from_cycles(12, &["(1,2,3)"]).unwrap();
        assert!(matches!(normalizer(&s12, &k, SearchBound::default()), Err(Error::BoundExceeded(_))));
    }
}
