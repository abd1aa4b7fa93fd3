//! Group actions on finite labeled sets, orbits and coset actions.

use std::collections::HashMap;
use std::sync::Arc;

use super::group::PermGroup;
use super::perm::Perm;
use crate::{Error, Result};

/// Largest coset space enumerated.
pub const MAX_COSETS: usize = 1_000_000;

/// A group acting on `{0, .., n-1}` through one domain permutation per
/// group generator.
#[derive(Clone, Debug)]
pub struct PermAction {
    group: Arc<PermGroup>,
    n: usize,
    images: Vec<Perm>,
    labels: Option<Vec<String>>,
}

/// An orbit together with, for each point, a word in the generators (0-based
/// indices, applied left to right) carrying the start point to it.
#[derive(Clone, Debug)]
pub struct Orbit {
    pub points: Vec<usize>,
    pub words: Vec<Vec<usize>>,
}

impl PermAction {
    /// The action of a permutation group on its own points.
    pub fn natural(group: Arc<PermGroup>) -> Self {
        Self {
            n: group.degree(),
            images: group.gens().to_vec(),
            labels: None,
            group,
        }
    }

    /// Validates that `images` are permutations of one domain and define a homomorphism.
    pub fn new(group: Arc<PermGroup>, images: Vec<Perm>, labels: Option<Vec<String>>) -> Result<Self> {
        if images.len() != group.gens().len() {
            return Err(Error::invalid(format!(
                "{} domain permutations for {} generators",
                images.len(),
                group.gens().len()
            )));
        }
        let n = images.first().map_or(1, |p| p.degree());
        if images.iter().any(|p| p.degree() != n) {
            return Err(Error::invalid("domain permutations of different degrees"));
        }
        if let Some(l) = &labels {
            if l.len() != n {
                return Err(Error::invalid("label count differs from domain size"));
            }
        }
        if !group.is_homomorphism(&images, &Perm::identity(n)) {
            return Err(Error::Relator("domain permutations violate a group relation".into()));
        }
        Ok(Self {
            group,
            n,
            images,
            labels,
        })
    }

    pub(crate) fn new_unchecked(group: Arc<PermGroup>, images: Vec<Perm>, labels: Option<Vec<String>>) -> Self {
        let n = images.first().map_or(1, |p| p.degree());
        Self {
            group,
            n,
            images,
            labels,
        }
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn images(&self) -> &[Perm] {
        &self.images
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of a point; 1-based number when unlabeled.
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => (i + 1).to_string(),
        }
    }

    /// Domain permutation induced by a group element.
    pub fn image_of(&self, g: &Perm) -> Result<Perm> {
        let mut ev = self.group.evaluator(self.images.clone(), Perm::identity(self.n));
        self.group.eval_element(&mut ev, g)
    }

    pub fn orbit(&self, point: usize) -> Result<Orbit> {
        if point >= self.n {
            return Err(Error::PointOutOfRange(point + 1));
        }
        let mut index = vec![usize::MAX; self.n];
        index[point] = 0;
        let mut points = vec![point];
        let mut words: Vec<Vec<usize>> = vec![vec![]];
        let mut i = 0;
        while i < points.len() {
            for (k, g) in self.images.iter().enumerate() {
                let y = g.image(points[i]);
                if index[y] == usize::MAX {
                    index[y] = points.len();
                    let mut w = words[i].clone();
                    w.push(k);
                    points.push(y);
                    words.push(w);
                }
            }
            i += 1;
        }
        Ok(Orbit { points, words })
    }

    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for x in 0..self.n {
            if !seen[x] {
                let o = self.orbit(x).expect("in range").points;
                for &y in &o {
                    seen[y] = true;
                }
                out.push(o);
            }
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() <= 1
    }

    /// Points fixed by every generator.
    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&x| self.images.iter().all(|g| g.image(x) == x))
            .collect()
    }

    /// The action of a subgroup, obtained by evaluating its generators.
    pub fn restrict(&self, sub: Arc<PermGroup>) -> Result<PermAction> {
        if !sub.is_subgroup_of(&self.group) {
            return Err(Error::NotSubgroup("restricting an action".into()));
        }
        let mut ev = self.group.evaluator(self.images.clone(), Perm::identity(self.n));
        let images = sub
            .gens()
            .iter()
            .map(|g| self.group.eval_element(&mut ev, g))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new_unchecked(sub, images, self.labels.clone()))
    }

    /// The action on an invariant subset, renumbered in the given order.
    pub fn on_subset(&self, points: &[usize]) -> Result<PermAction> {
        let mut pos = HashMap::new();
        for (i, &x) in points.iter().enumerate() {
            if x >= self.n {
                return Err(Error::PointOutOfRange(x + 1));
            }
            pos.insert(x, i);
        }
        let images = self
            .images
            .iter()
            .map(|g| {
                points
                    .iter()
                    .map(|&x| pos.get(&g.image(x)).copied())
                    .collect::<Option<Vec<_>>>()
                    .ok_or_else(|| Error::invalid("subset is not invariant"))
                    .and_then(Perm::from_images)
            })
            .collect::<Result<Vec<_>>>()?;
        let labels = Some(points.iter().map(|&x| self.label(x)).collect());
        Ok(Self::new_unchecked(self.group.clone(), images, labels))
    }

    /// Image of the group in `Sym(n)`.
    pub fn image_group(&self) -> PermGroup {
        PermGroup::new(self.n, self.images.clone()).expect("same degree")
    }
}

/// Canonical element of the right coset `H g`: the element whose images of
/// the base of `H` are lexicographically least.
pub fn canonical_coset_rep(h: &PermGroup, g: &Perm) -> Perm {
    let mut x = g.clone();
    for lev in h.levels() {
        let best = lev
            .orbit
            .iter()
            .copied()
            .min_by_key(|&gamma| x.image(gamma))
            .expect("orbit contains the base point");
        let t = lev.trans[best].as_ref().unwrap();
        x = t.perm.mul(&x);
    }
    x
}

/// Right cosets of `h` in `g`: representatives (the first is the identity)
/// and the action of each generator of `g` on them.
pub fn enumerate_cosets(g: &PermGroup, h: &PermGroup) -> Result<(Vec<Perm>, Vec<Perm>)> {
    if !h.is_subgroup_of(g) {
        return Err(Error::NotSubgroup("coset action needs H <= G".into()));
    }
    let index = g.order() / h.order();
    if index > MAX_COSETS as u128 {
        return Err(Error::BoundExceeded(format!("{index} cosets (bound {MAX_COSETS})")));
    }
    let start = canonical_coset_rep(h, &g.identity());
    let mut reps = vec![start.clone()];
    let mut canon = vec![start.clone()];
    let mut lookup: HashMap<Perm, usize> = HashMap::new();
    lookup.insert(start, 0);
    let ng = g.gens().len();
    let mut table: Vec<Vec<u32>> = vec![Vec::new(); ng];
    let mut i = 0;
    while i < reps.len() {
        for (k, s) in g.gens().iter().enumerate() {
            let c = canonical_coset_rep(h, &canon[i].mul(s));
            let j = match lookup.get(&c) {
                Some(&j) => j,
                None => {
                    let j = reps.len();
                    reps.push(reps[i].mul(s));
                    canon.push(c.clone());
                    lookup.insert(c, j);
                    j
                }
            };
            table[k].push(j as u32);
        }
        i += 1;
    }
    if reps.len() as u128 != index {
        return Err(Error::invalid("coset enumeration did not close"));
    }
    reps[0] = g.identity();
    let images = table.into_iter().map(Perm::from_images_unchecked).collect();
    Ok((reps, images))
}

/// The action of `g` on the right cosets `H\G`; point 0 is the coset `H`.
pub fn coset_action(g: &Arc<PermGroup>, h: &PermGroup) -> Result<PermAction> {
    let (reps, images) = enumerate_cosets(g, h)?;
    let labels = reps.iter().map(|r| format!("H{r}")).collect();
    Ok(PermAction::new_unchecked(g.clone(), images, Some(labels)))
}

/// A right transversal of `h` in `g` (first element the identity).
pub fn right_transversal(g: &PermGroup, h: &PermGroup) -> Result<Vec<Perm>> {
    Ok(enumerate_cosets(g, h)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn natural_orbits() {
        let a8 = Arc::new(PermGroup::alternating(8));
        let act = PermAction::natural(a8);
        assert_eq!(act.orbit(0).unwrap().points.len(), 8);
        let p = Arc::new(PermGroup::from_cycles(8, &["(1,2,3)", "(4,5,6)"]).unwrap());
        let act = PermAction::natural(p);
        assert_eq!(act.orbit(6).unwrap().points, vec![6]);
        let o = act.orbit(0).unwrap();
        assert_eq!(o.points.len(), 3);
        for (x, w) in o.points.iter().zip(&o.words) {
            let y = w.iter().fold(0, |pt, &k| act.images()[k].image(pt));
            assert_eq!(y, *x);
        }
        assert!(act.orbit(8).is_err());
    }

    #[test]
    fn coset_actions() {
        let a8 = Arc::new(PermGroup::alternating(8));
        let a7 = a8.stabilizer(&[7]).unwrap();
        let act = coset_action(&a8, &a7).unwrap();
        assert_eq!(act.size(), 8);
        assert!(act.is_transitive());
        let stab = act.image_group().stabilizer(&[0]).unwrap();
        assert_eq!(stab.order(), 2520);
        let one = coset_action(&a8, &a8).unwrap();
        assert_eq!(one.size(), 1);
        // validated constructor accepts the coset action
        PermAction::new(a8.clone(), act.images().to_vec(), None).unwrap();
        let bad = vec![Perm::identity(8), act.images()[1].clone()];
        let g2 = Arc::new(PermGroup::new(8, a8.gens()[..2].to_vec()).unwrap());
        assert!(PermAction::new(g2, bad, None).is_err());
    }

    #[test]
    fn base_coset_stabilizer_is_h() {
        let s5 = Arc::new(PermGroup::symmetric(5));
        let h = PermGroup::from_cycles(5, &["(1,2)", "(3,4,5)"]).unwrap();
        let act = coset_action(&s5, &h).unwrap();
        assert_eq!(act.size() as u128 * h.order(), s5.order());
        for g in s5.elements(200).unwrap() {
            let fixes = act.image_of(&g).unwrap().image(0) == 0;
            assert_eq!(fixes, h.contains(&g));
        }
    }
}
