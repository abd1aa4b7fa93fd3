//! Permutation groups with a base and strong generating set.

use std::collections::HashSet;
use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::perm::Perm;
use super::slp::{Evaluator, GroupLike, Slp};
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub(crate) struct Transversal {
    pub perm: Perm,
    pub inv: Perm,
    pub node: usize,
}

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub base: usize,
    /// Indices into the strong generating set.
    pub gens: Vec<usize>,
    pub orbit: Vec<usize>,
    /// `trans[x]` maps the base point to `x`.
    pub trans: Vec<Option<Transversal>>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut trans = vec![None; degree];
        trans[base] = Some(Transversal {
            perm: Perm::identity(degree),
            inv: Perm::identity(degree),
            node: Slp::IDENTITY,
        });
        Self {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            trans,
        }
    }
}

/// Result of sifting an element through the chain.
#[derive(Clone, Debug)]
pub struct Sift {
    pub residue: Perm,
    /// Number of levels passed.
    pub depth: usize,
    /// Orbit point hit at each level passed.
    pub path: Vec<usize>,
}

/// A permutation group given by generators, with a stabilizer chain whose
/// strong generators and transversal elements are stored as straight-line
/// programs in the original generators.
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    slp: Slp,
    strong: Vec<(Perm, usize)>,
    levels: Vec<Level>,
    order: u128,
    relators: OnceLock<Vec<(Vec<usize>, Vec<usize>)>>,
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order)
            .field("gens", &self.gens)
            .finish()
    }
}

struct Builder {
    degree: usize,
    slp: Slp,
    strong: Vec<(Perm, usize)>,
    levels: Vec<Level>,
}

impl Builder {
    fn sift_from(&self, mut g: Perm, start: usize) -> Sift {
        let mut path = Vec::new();
        for l in start..self.levels.len() {
            let lev = &self.levels[l];
            let gamma = g.image(lev.base);
            match &lev.trans[gamma] {
                None => {
                    return Sift {
                        residue: g,
                        depth: l,
                        path,
                    }
                }
                Some(t) => {
                    g = g.mul(&t.inv);
                    path.push(gamma);
                }
            }
        }
        Sift {
            residue: g,
            depth: self.levels.len(),
            path,
        }
    }

    /// Node for `g * u_{path[0]}^-1 * u_{path[1]}^-1 ...` starting at level `start`.
    fn residue_node(&mut self, g_node: usize, start: usize, path: &[usize]) -> usize {
        let mut node = g_node;
        for (k, &gamma) in path.iter().enumerate() {
            let t = self.levels[start + k].trans[gamma].as_ref().unwrap().node;
            let inv = self.slp.inv(t);
            node = self.slp.mul(node, inv);
        }
        node
    }

    fn close_orbit(&mut self, l: usize) {
        let mut i = 0;
        while i < self.levels[l].orbit.len() {
            let gamma = self.levels[l].orbit[i];
            for k in 0..self.levels[l].gens.len() {
                let s = self.levels[l].gens[k];
                let delta = self.strong[s].0.image(gamma);
                if self.levels[l].trans[delta].is_none() {
                    let (up, unode) = {
                        let t = self.levels[l].trans[gamma].as_ref().unwrap();
                        (t.perm.clone(), t.node)
                    };
                    let perm = up.mul(&self.strong[s].0);
                    let node = self.slp.mul(unode, self.strong[s].1);
                    let inv = perm.inv();
                    self.levels[l].trans[delta] = Some(Transversal { perm, inv, node });
                    self.levels[l].orbit.push(delta);
                }
            }
            i += 1;
        }
    }

    /// Adds a strong generator; returns the deepest level it belongs to.
    fn add_strong(&mut self, g: Perm, node: usize) -> usize {
        let j = match self
            .levels
            .iter()
            .position(|lev| g.image(lev.base) != lev.base)
        {
            Some(j) => j,
            None => {
                let b = g.first_moved().expect("non-identity");
                self.levels.push(Level::new(b, self.degree));
                self.levels.len() - 1
            }
        };
        let idx = self.strong.len();
        self.strong.push((g, node));
        for l in 0..=j {
            self.levels[l].gens.push(idx);
            self.close_orbit(l);
        }
        j
    }

    fn random_phase(&mut self, gens: &[Perm], seed: u64) {
        if gens.iter().all(|g| g.is_identity()) {
            return;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let slots = 10.max(gens.len());
        let mut pool: Vec<(Perm, usize)> = (0..slots)
            .map(|i| (gens[i % gens.len()].clone(), self.slp.gen(i % gens.len())))
            .collect();
        let mut acc = (Perm::identity(self.degree), Slp::IDENTITY);
        let mut step = |rng: &mut ChaCha8Rng, slp: &mut Slp, pool: &mut Vec<(Perm, usize)>| {
            let i = rng.gen_range(0..pool.len());
            let mut j = rng.gen_range(0..pool.len() - 1);
            if j >= i {
                j += 1;
            }
            let (pj, nj) = pool[j].clone();
            if rng.gen_bool(0.5) {
                pool[i] = (pool[i].0.mul(&pj), slp.mul(pool[i].1, nj));
            } else {
                pool[i] = (pj.mul(&pool[i].0), slp.mul(nj, pool[i].1));
            }
            acc = (acc.0.mul(&pool[i].0), slp.mul(acc.1, pool[i].1));
            acc.clone()
        };
        for _ in 0..30 {
            step(&mut rng, &mut self.slp, &mut pool);
        }
        let mut quiet = 0;
        let mut total = 0;
        while quiet < 20 && total < 2000 {
            let (r, rn) = step(&mut rng, &mut self.slp, &mut pool);
            total += 1;
            let s = self.sift_from(r, 0);
            if s.residue.is_identity() {
                quiet += 1;
            } else {
                quiet = 0;
                let node = self.residue_node(rn, 0, &s.path);
                self.add_strong(s.residue, node);
            }
        }
    }

    fn verify(&mut self) {
        let mut checked: Vec<HashSet<(usize, usize)>> = Vec::new();
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let l = i as usize;
            while checked.len() < self.levels.len() {
                checked.push(HashSet::new());
            }
            let mut added = None;
            'outer: for oi in 0..self.levels[l].orbit.len() {
                let beta = self.levels[l].orbit[oi];
                for k in 0..self.levels[l].gens.len() {
                    let s = self.levels[l].gens[k];
                    if !checked[l].insert((beta, s)) {
                        continue;
                    }
                    let (h, hnode) = {
                        let lev = &self.levels[l];
                        let ub = lev.trans[beta].as_ref().unwrap();
                        let (sp, sn) = &self.strong[s];
                        let target = sp.image(beta);
                        let ut = lev.trans[target].as_ref().unwrap();
                        (ub.perm.mul(sp).mul(&ut.inv), (ub.node, *sn, ut.node))
                    };
                    let sift = self.sift_from(h, l + 1);
                    if !sift.residue.is_identity() {
                        let a = self.slp.mul(hnode.0, hnode.1);
                        let c = self.slp.inv(hnode.2);
                        let hn = self.slp.mul(a, c);
                        let node = self.residue_node(hn, l + 1, &sift.path);
                        added = Some(self.add_strong(sift.residue, node));
                        break 'outer;
                    }
                }
            }
            match added {
                Some(j) => i = j as isize,
                None => i -= 1,
            }
        }
    }
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        Self::with_base(degree, Vec::new(), &[], 0).expect("trivial group")
    }

    /// Builds the group generated by `gens` on `degree` points (default seed 0).
    pub fn new(degree: usize, gens: Vec<Perm>) -> Result<Self> {
        Self::with_base(degree, gens, &[], 0)
    }

    pub fn with_seed(degree: usize, gens: Vec<Perm>, seed: u64) -> Result<Self> {
        Self::with_base(degree, gens, &[], seed)
    }

    /// Builds the chain with the given points as a base prefix.
    pub fn with_base(degree: usize, gens: Vec<Perm>, prefix: &[usize], seed: u64) -> Result<Self> {
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::Degree(g.degree(), degree));
            }
        }
        let mut b = Builder {
            degree,
            slp: Slp::new(gens.len()),
            strong: Vec::new(),
            levels: Vec::new(),
        };
        for &x in prefix {
            if x >= degree {
                return Err(Error::PointOutOfRange(x + 1));
            }
            if !b.levels.iter().any(|l| l.base == x) {
                b.levels.push(Level::new(x, degree));
            }
        }
        for (i, g) in gens.iter().enumerate() {
            let s = b.sift_from(g.clone(), 0);
            if !s.residue.is_identity() {
                let node = b.residue_node(b.slp.gen(i), 0, &s.path);
                b.add_strong(s.residue, node);
            }
        }
        b.random_phase(&gens, seed);
        b.verify();
        let mut order: u128 = 1;
        for lev in &b.levels {
            order = order
                .checked_mul(lev.orbit.len() as u128)
                .ok_or_else(|| Error::invalid("group order exceeds 128 bits"))?;
        }
        Ok(Self {
            degree,
            gens,
            slp: b.slp,
            strong: b.strong,
            levels: b.levels,
            order,
            relators: OnceLock::new(),
        })
    }

    /// Parses generators in 1-based cycle notation.
    pub fn from_cycles(degree: usize, gens: &[&str]) -> Result<Self> {
        let perms = gens
            .iter()
            .map(|s| Perm::parse(s, degree))
            .collect::<Result<Vec<_>>>()?;
        Self::new(degree, perms)
    }

    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Perm::from_cycles(n, &[&[0, 1]]).unwrap());
            let cyc: Vec<usize> = (0..n).collect();
            gens.push(Perm::from_cycles(n, &[&cyc]).unwrap());
        }
        Self::new(n, gens).expect("valid generators")
    }

    pub fn alternating(n: usize) -> Self {
        let gens = (0..n.saturating_sub(2))
            .map(|i| Perm::from_cycles(n, &[&[i, i + 1, i + 2]]).unwrap())
            .collect();
        Self::new(n, gens).expect("valid generators")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn gens(&self) -> &[Perm] {
        &self.gens
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.degree)
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn basic_orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn strong_gens(&self) -> Vec<Perm> {
        self.strong.iter().map(|(p, _)| p.clone()).collect()
    }

    pub(crate) fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn slp(&self) -> &Slp {
        &self.slp
    }

    /// Program node of each strong generator.
    pub fn strong_nodes(&self) -> Vec<usize> {
        self.strong.iter().map(|(_, n)| *n).collect()
    }

    pub fn sift(&self, g: &Perm) -> Sift {
        let mut g = g.clone();
        let mut path = Vec::new();
        for (l, lev) in self.levels.iter().enumerate() {
            let gamma = g.image(lev.base);
            match &lev.trans[gamma] {
                None => {
                    return Sift {
                        residue: g,
                        depth: l,
                        path,
                    }
                }
                Some(t) => {
                    g = g.mul(&t.inv);
                    path.push(gamma);
                }
            }
        }
        Sift {
            residue: g,
            depth: self.levels.len(),
            path,
        }
    }

    pub fn contains(&self, g: &Perm) -> bool {
        g.degree() == self.degree && self.sift(g).residue.is_identity()
    }

    /// Program nodes whose product (in order) is `g`, or `None` for non-members.
    pub fn element_nodes(&self, g: &Perm) -> Option<Vec<usize>> {
        if g.degree() != self.degree {
            return None;
        }
        let s = self.sift(g);
        if !s.residue.is_identity() {
            return None;
        }
        Some(self.path_nodes(&s.path))
    }

    fn path_nodes(&self, path: &[usize]) -> Vec<usize> {
        path.iter()
            .enumerate()
            .rev()
            .map(|(l, &x)| self.levels[l].trans[x].as_ref().unwrap().node)
            .collect()
    }

    /// Word in the original generators (signed, 1-based) for a member, if its
    /// expansion stays below `limit` letters.
    pub fn word(&self, g: &Perm, limit: usize) -> Option<Vec<i64>> {
        let nodes = self.element_nodes(g)?;
        let mut out = Vec::new();
        for n in nodes {
            out.extend(self.slp.word(n, limit.saturating_sub(out.len()))?);
        }
        Some(out)
    }

    /// Evaluator of this group's program nodes with generator values `values`.
    pub fn evaluator<T: GroupLike>(&self, values: Vec<T>, identity: T) -> Evaluator<'_, T> {
        Evaluator::new(&self.slp, values, identity)
    }

    /// Image of `g` under the map sending generator `i` to `ev.gens()[i]`.
    pub fn eval_element<T: GroupLike>(&self, ev: &mut Evaluator<'_, T>, g: &Perm) -> Result<T> {
        let nodes = self.element_nodes(g).ok_or(Error::NotMember)?;
        Ok(ev.eval_product(&nodes))
    }

    pub fn random_element(&self, rng: &mut impl Rng) -> Perm {
        let mut g = self.identity();
        for lev in self.levels.iter().rev() {
            let x = lev.orbit[rng.gen_range(0..lev.orbit.len())];
            g = g.mul(&lev.trans[x].as_ref().unwrap().perm);
        }
        g
    }

    /// All elements; refuses groups larger than `bound`.
    pub fn elements(&self, bound: u128) -> Result<Vec<Perm>> {
        if self.order > bound {
            return Err(Error::BoundExceeded(format!(
                "enumerating {} elements (bound {bound})",
                self.order
            )));
        }
        let mut elems = vec![self.identity()];
        for lev in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(elems.len() * lev.orbit.len());
            for x in &lev.orbit {
                let t = &lev.trans[*x].as_ref().unwrap().perm;
                for e in &elems {
                    next.push(e.mul(t));
                }
            }
            elems = next;
        }
        Ok(elems)
    }

    /// Schreier relations `u_b * s = (sifted product) * u_{b^s}` as pairs of node lists.
    /// Together with the generator relations they present the group on its strong generators.
    pub(crate) fn relators(&self) -> &[(Vec<usize>, Vec<usize>)] {
        self.relators.get_or_init(|| {
            let mut out = Vec::new();
            for (l, lev) in self.levels.iter().enumerate() {
                for &beta in &lev.orbit {
                    let ub = lev.trans[beta].as_ref().unwrap();
                    for &s in &lev.gens {
                        let (sp, sn) = &self.strong[s];
                        let target = sp.image(beta);
                        let ut = lev.trans[target].as_ref().unwrap();
                        let h = ub.perm.mul(sp).mul(&ut.inv);
                        let mut g = h;
                        let mut path = Vec::new();
                        for lev2 in &self.levels[l + 1..] {
                            let gamma = g.image(lev2.base);
                            let t = lev2.trans[gamma].as_ref().expect("valid chain");
                            g = g.mul(&t.inv);
                            path.push(gamma);
                        }
                        debug_assert!(g.is_identity());
                        let mut rhs: Vec<usize> = path
                            .iter()
                            .enumerate()
                            .rev()
                            .map(|(k, &x)| self.levels[l + 1 + k].trans[x].as_ref().unwrap().node)
                            .collect();
                        rhs.push(ut.node);
                        out.push((vec![ub.node, *sn], rhs));
                    }
                }
            }
            for g in &self.gens {
                let nodes = self.element_nodes(g).expect("generator is a member");
                out.push((vec![], nodes));
            }
            out
        })
    }

    /// Exact check that generator images `values` define a homomorphism.
    pub fn is_homomorphism<T: GroupLike + PartialEq>(&self, values: &[T], identity: &T) -> bool {
        if values.len() != self.gens.len() {
            return false;
        }
        let mut ev = self.evaluator(values.to_vec(), identity.clone());
        let ngens = self.gens.len();
        for (k, (lhs, rhs)) in self.relators().iter().enumerate() {
            let a = if lhs.is_empty() {
                // generator relation: value of generator k equals its sifted product
                let idx = k + ngens - self.relators().len();
                values[idx].clone()
            } else {
                ev.eval_product(lhs)
            };
            if a != ev.eval_product(rhs) {
                return false;
            }
        }
        true
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.gens.iter().all(|g| other.contains(g))
    }

    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.order == other.order && self.is_subgroup_of(other)
    }

    pub fn is_abelian(&self) -> bool {
        self.gens
            .iter()
            .enumerate()
            .all(|(i, a)| self.gens[i + 1..].iter().all(|b| a.mul(b) == b.mul(a)))
    }

    /// Orbit of a point under the generators, in discovery order.
    pub fn orbit(&self, x: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        seen[x] = true;
        let mut orb = vec![x];
        let mut i = 0;
        while i < orb.len() {
            for g in &self.gens {
                let y = g.image(orb[i]);
                if !seen[y] {
                    seen[y] = true;
                    orb.push(y);
                }
            }
            i += 1;
        }
        orb
    }

    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for x in 0..self.degree {
            if !seen[x] {
                let o = self.orbit(x);
                for &y in &o {
                    seen[y] = true;
                }
                out.push(o);
            }
        }
        out
    }

    /// Pointwise stabilizer of the given points.
    pub fn stabilizer(&self, points: &[usize]) -> Result<PermGroup> {
        let g = PermGroup::with_base(self.degree, self.gens.clone(), points, 0)?;
        let mut distinct = points.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let k = distinct.len();
        let gens: Vec<Perm> = g.levels.get(k).map_or_else(Vec::new, |lev| {
            lev.gens.iter().map(|&s| g.strong[s].0.clone()).collect()
        });
        PermGroup::new(self.degree, gens)
    }

    /// Subgroup generated by members of `self`; membership is checked.
    pub fn subgroup(&self, gens: Vec<Perm>) -> Result<PermGroup> {
        for g in &gens {
            if !self.contains(g) {
                return Err(Error::NotSubgroup(format!("{g} is not in the group")));
            }
        }
        PermGroup::new(self.degree, gens)
    }

    /// `self^g`.
    pub fn conjugate(&self, g: &Perm) -> PermGroup {
        let gens = self.gens.iter().map(|x| x.conj(g)).collect();
        PermGroup::new(self.degree, gens).expect("same degree")
    }

    /// Whether `g` normalizes `self`.
    pub fn is_normalized_by(&self, g: &Perm) -> bool {
        self.gens.iter().all(|x| self.contains(&x.conj(g)))
    }

    pub fn is_normal_in(&self, other: &PermGroup) -> bool {
        other.gens.iter().all(|g| self.is_normalized_by(g))
    }

    /// Smallest subgroup normal in `ambient` containing `gens`.
    pub fn normal_closure(ambient: &PermGroup, gens: Vec<Perm>) -> PermGroup {
        let mut cur = gens;
        let mut h = PermGroup::new(ambient.degree, cur.clone()).expect("same degree");
        loop {
            let mut grew = false;
            for x in cur.clone() {
                for g in &ambient.gens {
                    let y = x.conj(g);
                    if !h.contains(&y) {
                        cur.push(y);
                        h = PermGroup::new(ambient.degree, cur.clone()).expect("same degree");
                        grew = true;
                    }
                }
            }
            if !grew {
                return h;
            }
        }
    }

    pub fn derived_subgroup(&self) -> PermGroup {
        let mut comms = Vec::new();
        for (i, a) in self.gens.iter().enumerate() {
            for b in &self.gens[i + 1..] {
                let c = a.inv().mul(&b.inv()).mul(a).mul(b);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        Self::normal_closure(self, comms)
    }

    pub fn into_arc(self) -> Arc<PermGroup> {
        Arc::new(self)
    }
}
